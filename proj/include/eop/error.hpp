#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eop {

enum class ErrorKind {
  InvalidGraph,
  InvalidArgument,
  Parse,
  NotATree,
  BadRoot,
  NotIndependent,
  BudgetExceeded,
  UndefinedBound,
  InfeasiblePattern,
  OutOfRange,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the toolkit. The kind is what the CLI reports in
// its JSON error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eop
