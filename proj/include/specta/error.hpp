#pragma once

#include <stdexcept>
#include <string>

namespace specta {

enum class ErrorKind {
  InputError,
  ParseError,
  UnboundedInput,
  RegularityViolation,
  NotInM,
  IndeterminateDenominator,
  IndeterminateOrder,
  NegativeLeadingSqrt,
  IrrationalCoefficient,
  UnboundedAlongPath,
  NotPositiveOnPath,
  NotOnVariety,
  NormalizationRequired,
  DecompositionFailure,
};

const char* errorKindName(ErrorKind kind);

/// Single exception type for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(errorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* errorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InputError: return "InputError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnboundedInput: return "UnboundedInput";
    case ErrorKind::RegularityViolation: return "RegularityViolation";
    case ErrorKind::NotInM: return "NotInM";
    case ErrorKind::IndeterminateDenominator: return "IndeterminateDenominator";
    case ErrorKind::IndeterminateOrder: return "IndeterminateOrder";
    case ErrorKind::NegativeLeadingSqrt: return "NegativeLeadingSqrt";
    case ErrorKind::IrrationalCoefficient: return "IrrationalCoefficient";
    case ErrorKind::UnboundedAlongPath: return "UnboundedAlongPath";
    case ErrorKind::NotPositiveOnPath: return "NotPositiveOnPath";
    case ErrorKind::NotOnVariety: return "NotOnVariety";
    case ErrorKind::NormalizationRequired: return "NormalizationRequired";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
  }
  return "Error";
}

}  // namespace specta
