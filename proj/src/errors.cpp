#include "hyperct/errors.hpp"

namespace hyperct {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotShiftFree: return "NotShiftFree";
    case ErrorCode::KernelNotShiftReduced: return "KernelNotShiftReduced";
    case ErrorCode::BadDirection: return "BadDirection";
    case ErrorCode::NotIntegerLinear: return "NotIntegerLinear";
    case ErrorCode::NotAFactor: return "NotAFactor";
    case ErrorCode::NotAlignable: return "NotAlignable";
    case ErrorCode::NoTelescoperExists: return "NoTelescoperExists";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonIntegerLinearArgument: return "NonIntegerLinearArgument";
    case ErrorCode::CompatibilityViolation: return "CompatibilityViolation";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace hyperct
