#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opencat {

enum class ErrorCode {
  NotHyperbolic,
  NotUnimodular,
  InvalidRadius,
  NonPositiveN,
  GridTooCoarse,
  InvalidSpec,
  OddDimension,
  DegeneratePhase,
  TruncationOverflow,
  NonFinite,
  OracleNoConvergence,
  DimensionMismatch,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace opencat
