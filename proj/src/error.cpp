#include "hstar/error.hpp"

namespace hstar {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::MixedDimensions: return "MixedDimensions";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NonpositiveScale: return "NonpositiveScale";
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::ExhaustedRetries: return "ExhaustedRetries";
    case ErrorKind::AffinelyDependent: return "AffinelyDependent";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotLatticePolytope: return "NotLatticePolytope";
    case ErrorKind::NonIntegralGenerator: return "NonIntegralGenerator";
    case ErrorKind::DimensionZero: return "DimensionZero";
    case ErrorKind::BoxTooLarge: return "BoxTooLarge";
    case ErrorKind::TailNonzero: return "TailNonzero";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::ApexInSpan: return "ApexInSpan";
    case ErrorKind::InvalidM: return "InvalidM";
    case ErrorKind::IdentityViolated: return "IdentityViolated";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hstar
