#include "stagelet/error.hpp"

namespace stagelet {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnboundVariable: return "unbound variable";
    case ErrorKind::TypeMismatch: return "type mismatch";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::StepLimitExceeded: return "step limit exceeded";
    case ErrorKind::ResidualBindings: return "residual bindings";
    case ErrorKind::CanonLimitExceeded: return "canonicalization limit exceeded";
    case ErrorKind::PendingBinding: return "pending binding";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& details)
    : std::runtime_error(std::string(to_string(kind)) + ": " + details), kind_(kind), details_(details) {}

}  // namespace stagelet
