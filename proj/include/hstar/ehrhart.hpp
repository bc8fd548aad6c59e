#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hstar/geometry.hpp"
#include "hstar/lattice.hpp"
#include "hstar/polynomial.hpp"
#include "hstar/triangulation.hpp"

namespace hstar {

/// Lattice points of the half-open fundamental parallelepiped of the cone
/// over S, generator j being (heights[j] * v_j, heights[j]).
/// Throws NonIntegralGenerator when some heights[j] * v_j is fractional.
ParallelepipedPoints fpp_enumerate(const HalfOpenSimplex& s, const std::vector<std::int64_t>& heights);

/// Sorted last coordinates of fpp_enumerate.
std::vector<std::int64_t> fpp_points(const HalfOpenSimplex& s, const std::vector<std::int64_t>& heights);

/// Numerator of Ehr_S(z) over (1 - z^q)^(dim S + 1).
GradedPolynomial hstar_simplex(const HalfOpenSimplex& s, std::int64_t q);

struct HstarOptions {
  std::int64_t period = 0;     // denominator exponent; 0 means the denominator q of P
  std::uint64_t seed = 0;      // generic point choice
  std::optional<Point> apex;   // boundary cone apex, interior point of P
};

/// Numerator of Ehr_P(z) over (1 - z^m)^(d+1), m = options.period.
GradedPolynomial hstar_polytope(const Polytope& p, const HstarOptions& options = {});
/// Numerator of 1 + sum ehr_{boundary}(n) z^n over (1 - z^m)^d.
GradedPolynomial hstar_boundary(const Polytope& p, const HstarOptions& options = {});
/// Numerator of sum ehr_{interior}(n) z^n over (1 - z^m)^(d+1).
GradedPolynomial hstar_interior(const Polytope& p, const HstarOptions& options = {});

/// numerator / (1 - z^exponent)^power, exponent in grid units of the numerator.
struct SeriesForm {
  GradedPolynomial numerator;
  std::int64_t exponent = 1;
  std::int64_t power = 1;

  /// First `count` coefficients of the expansion, indexed by grid index.
  std::vector<Integer> expand(std::size_t count) const;
};

SeriesForm ehrhart_series(const Polytope& p);
SeriesForm boundary_series(const Polytope& p);

/// ehr_P(n) = sum_i k[i](n) n^i with k[i] periodic; k[i][n mod k[i].size()].
struct QuasiCoefficients {
  std::vector<std::vector<Rational>> k;

  Rational coefficient(std::size_t i, std::int64_t n) const;
  Rational evaluate(std::int64_t n) const;
};

QuasiCoefficients quasi_coefficients(const Polytope& p);

/// Checks the requested period against q and returns it.
std::int64_t resolve_period(const Polytope& p, std::int64_t period);

}  // namespace hstar
