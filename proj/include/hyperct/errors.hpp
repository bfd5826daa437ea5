#pragma once

#include <stdexcept>
#include <string>

namespace hyperct {

enum class ErrorCode {
  ZeroInput,
  NotIrreducible,
  NotShiftFree,
  KernelNotShiftReduced,
  BadDirection,
  NotIntegerLinear,
  NotAFactor,
  NotAlignable,
  NoTelescoperExists,
  NotApplicable,
  SyntaxError,
  NonIntegerLinearArgument,
  CompatibilityViolation,
  DivisionByZero,
  NotExact,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected)
      : Error(ErrorCode::SyntaxError,
              "at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace hyperct
