// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#ifndef NILSPEC_ERRORS_HPP
#define NILSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilspec {

// Every recoverable failure in the library throws Error with a stable code,
// so callers (and the CLI's machine-readable stderr) can dispatch on it.
enum class ErrorCode {
  DivisionByZero,
  NotHermitian,
  NoConvergence,
  InvalidParameter,
  OddMvNegEps3,
  NonPositiveParam,
  DimensionMismatch,
  IndeterminateBoundary,
  TailTooLarge,
  ParseError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::OddMvNegEps3: return "OddMvNegEps3";
    case ErrorCode::NonPositiveParam: return "NonPositiveParam";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndeterminateBoundary: return "IndeterminateBoundary";
    case ErrorCode::TailTooLarge: return "TailTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nilspec

#endif  // NILSPEC_ERRORS_HPP
