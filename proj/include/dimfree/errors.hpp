#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dimfree {

// Shared error hierarchy. Everything user-visible derives from Error so the
// CLI can map library failures onto its exit codes in one place.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Config / input problems (CLI exit code 2).
struct ConfigError : Error {
  using Error::Error;
};

struct SyntaxError : ConfigError {
  std::size_t pos;
  SyntaxError(std::size_t p, const std::string& msg)
      : ConfigError(msg + " (at offset " + std::to_string(p) + ")"), pos(p) {}
};

struct ArityViolation : SyntaxError {
  using SyntaxError::SyntaxError;
};

struct UnknownIdentifier : SyntaxError {
  using SyntaxError::SyntaxError;
};

// Numerical / semantic failures (CLI exit code 3).
struct NumericError : Error {
  using Error::Error;
};

struct EvalError : NumericError {
  enum class Kind { DivByZero, Domain, NonFinite };
  Kind kind;
  std::size_t pos;
  EvalError(Kind k, std::size_t p, const std::string& msg)
      : NumericError(msg + " (at offset " + std::to_string(p) + ")"), kind(k), pos(p) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotEquivalent : Error {
  using Error::Error;
};

struct UnsupportedOrder : Error {
  using Error::Error;
};

struct NotSkew : Error {
  using Error::Error;
};

struct OddDimension : Error {
  using Error::Error;
};

struct UncontrollablePair : NumericError {
  using NumericError::NumericError;
};

struct ScheduleMismatch : ConfigError {
  using ConfigError::ConfigError;
};

struct MatchFailure : NumericError {
  using NumericError::NumericError;
};

struct NonFiniteState : NumericError {
  using NumericError::NumericError;
};

}  // namespace dimfree
