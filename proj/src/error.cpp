#include "eop/error.hpp"

namespace eop {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidGraph: return "invalid_graph";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::NotATree: return "not_a_tree";
    case ErrorKind::BadRoot: return "bad_root";
    case ErrorKind::NotIndependent: return "not_independent";
    case ErrorKind::BudgetExceeded: return "budget_exceeded";
    case ErrorKind::UndefinedBound: return "undefined_bound";
    case ErrorKind::InfeasiblePattern: return "infeasible_pattern";
    case ErrorKind::OutOfRange: return "out_of_range";
  }
  return "unknown";
}

}  // namespace eop
