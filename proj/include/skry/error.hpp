#pragma once

#include <stdexcept>
#include <string>

namespace skry {

enum class ErrorKind {
  FieldMismatch,
  ZeroInverse,
  DimensionMismatch,
  NotClosed,
  NonzeroCenter,
  NotToral,
  NotSandwich,
  SearchSpaceTooLarge,
  BudgetExceeded,
  NotMonomial,
  Parse,
  Validation,
  InvalidArgument,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "field mismatch";
    case ErrorKind::ZeroInverse: return "inverse of zero";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::NotClosed: return "not closed";
    case ErrorKind::NonzeroCenter: return "nonzero center";
    case ErrorKind::NotToral: return "not toral";
    case ErrorKind::NotSandwich: return "not a sandwich";
    case ErrorKind::SearchSpaceTooLarge: return "search space too large";
    case ErrorKind::BudgetExceeded: return "budget exceeded";
    case ErrorKind::NotMonomial: return "product not monomial";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Validation: return "validation failure";
    case ErrorKind::InvalidArgument: return "invalid argument";
  }
  return "error";
}

/// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace skry
