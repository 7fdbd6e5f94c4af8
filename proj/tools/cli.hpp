#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eop {

/// Runs the `eop` command line. `args` includes the program name. The JSON
/// report (or JSON error object) goes to `out`, a one-line human summary to
/// `err`. Returns 0 iff the report carries no failure flag.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eop
