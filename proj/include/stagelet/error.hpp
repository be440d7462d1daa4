#ifndef STAGELET_ERROR_HPP
#define STAGELET_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace stagelet {

enum class ErrorKind {
  UnboundVariable,
  TypeMismatch,
  DivisionByZero,
  StepLimitExceeded,
  ResidualBindings,
  CanonLimitExceeded,
  PendingBinding,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by evaluation or generation. `what()` carries the
// kind prefix and the details, such as the names or loci involved.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& details);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& details() const noexcept { return details_; }

private:
  ErrorKind kind_;
  std::string details_;
};

}  // namespace stagelet

#endif  // STAGELET_ERROR_HPP
