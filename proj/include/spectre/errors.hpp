#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spectre {

enum class ErrorKind {
  Syntax,
  NegativeExponent,
  UnknownVariable,
  NotACriticalGerm,
  ResourceLimit,
  NotQuasiHomogeneous,
  UnderdeterminedWeights,
  WeightOutOfRange,
  NonIntegralMu,
  InexactExpansion,
  NotConvenient,
  NotIsolated,
  BasisIncompatible,
  UnknownSingularity,
  DomainError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Base class for every error raised by the library. The kind is the
/// machine-readable part; what() carries a human-readable explanation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the polynomial parser; position is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, std::size_t position, std::string expected,
              const std::string& message)
      : Error(kind, message), position_(position), expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace spectre
