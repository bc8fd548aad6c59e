#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hstar/geometry.hpp"
#include "hstar/polynomial.hpp"

namespace hstar {

/// lcm of the nonzero offsets of the normalized facet description.
std::int64_t codenominator(const Polytope& p);

enum class OriginPosition { interior, boundary, outside };

std::string to_string(OriginPosition position);
OriginPosition origin_position(const Polytope& p);

/// Symmetric decomposition on the grid of the rational series; the shift is z^(ell/grid).
struct RationalDecomposition {
  std::int64_t ell = 1;
  GradedPolynomial lhs;
  GradedPolynomial a;
  GradedPolynomial b;
  GradedPolynomial boundary;  // boundary numerator computed on its own

  friend bool operator==(const RationalDecomposition&, const RationalDecomposition&) = default;
};

struct RationalSeriesReport {
  std::int64_t r = 1;
  std::int64_t m = 1;
  bool refined = false;
  std::int64_t grid = 1;  // r, or 2r when refined
  OriginPosition origin = OriginPosition::interior;
  GradedPolynomial numerator;  // over (1 - z^(m/grid))^(d+1)
  std::optional<RationalDecomposition> decomposition;

  friend bool operator==(const RationalSeriesReport&, const RationalSeriesReport&) = default;
};

/// Numerator of the rational Ehrhart series. With m = 0 the least valid m is
/// used; throws InvalidM when (m/grid) P is not a lattice polytope.
RationalSeriesReport rational_series(const Polytope& p, bool refined = false, std::int64_t m = 0);

/// Chooses the grid from the origin's position (refined when the origin is
/// outside P) and attaches the symmetric decomposition.
RationalSeriesReport rational_decompose(const Polytope& p, std::int64_t m = 0);

}  // namespace hstar
