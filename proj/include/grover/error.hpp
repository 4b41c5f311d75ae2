#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grover {

enum class ErrorCode {
  EmptyMarkedSet,
  IndexOutOfRange,
  SizeTooSmall,
  EllOutOfRange,
  DimensionMismatch,
  BudgetExceeded,
  CapExceeded,
  SingularCost,
  SingularCotangent,
  OutOfValidityRegion,
  NoConvergence,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::EmptyMarkedSet: return "EmptyMarkedSet";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::SizeTooSmall: return "SizeTooSmall";
  case ErrorCode::EllOutOfRange: return "EllOutOfRange";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  case ErrorCode::CapExceeded: return "CapExceeded";
  case ErrorCode::SingularCost: return "SingularCost";
  case ErrorCode::SingularCotangent: return "SingularCotangent";
  case ErrorCode::OutOfValidityRegion: return "OutOfValidityRegion";
  case ErrorCode::NoConvergence: return "NoConvergence";
  }
  return "Unknown";
}

/// Every library failure carries a machine-readable code; the CLI forwards it
/// verbatim in its {"error", "message"} object.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace grover
