#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hstar {

enum class ErrorKind {
  EmptyInput,
  MixedDimensions,
  NotFullDimensional,
  NonpositiveScale,
  OriginNotInterior,
  NotGeneric,
  ExhaustedRetries,
  AffinelyDependent,
  BoundExceeded,
  NotLatticePolytope,
  NonIntegralGenerator,
  DimensionZero,
  BoxTooLarge,
  TailNonzero,
  NotDivisible,
  NoSolution,
  ApexInSpan,
  InvalidM,
  IdentityViolated,
  InvariantViolated,
  GridMismatch,
  Overflow,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can branch on it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hstar
