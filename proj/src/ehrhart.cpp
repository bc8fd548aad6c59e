#include "hstar/ehrhart.hpp"

#include <algorithm>

#include "hstar/error.hpp"
#include "hstar/matrix.hpp"

namespace hstar {
namespace {

void require_full_dimensional(const Polytope& p) {
  if (!p.is_full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional, "polytope of dimension " + std::to_string(p.dim()) +
                                                   " in ambient dimension " + std::to_string(p.ambient_dim()));
  }
}

// Reduces a list of residue-class values to its minimal period.
std::vector<Rational> minimal_period(std::vector<Rational> values) {
  const std::size_t n = values.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = values[i] == values[i % p];
    if (ok) {
      values.resize(p);
      break;
    }
  }
  return values;
}

}  // namespace

std::int64_t resolve_period(const Polytope& p, std::int64_t period) {
  if (period == 0) return p.denominator();
  if (period < 0 || period % p.denominator() != 0) {
    throw Error(ErrorKind::InvalidM, "period " + std::to_string(period) + " is not a positive multiple of q = " +
                                         std::to_string(p.denominator()));
  }
  return period;
}

ParallelepipedPoints fpp_enumerate(const HalfOpenSimplex& s, const std::vector<std::int64_t>& heights) {
  if (heights.size() != s.vertices.size()) throw Error(ErrorKind::InvariantViolated, "one height per vertex expected");
  const std::size_t d = s.vertices.front().size();
  IntegerMatrix gens(d + 1, s.vertices.size());
  for (std::size_t j = 0; j < s.vertices.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      const Rational c = s.vertices[j][i] * heights[j];
      if (c.get_den() != 1) {
        throw Error(ErrorKind::NonIntegralGenerator,
                    std::to_string(heights[j]) + " * " + to_string(s.vertices[j]) + " is not integral");
      }
      gens(i, j) = c.get_num();
    }
    gens(d, j) = heights[j];
  }
  return parallelepiped_points(gens, s.missing);
}

std::vector<std::int64_t> fpp_points(const HalfOpenSimplex& s, const std::vector<std::int64_t>& heights) {
  auto pts = fpp_enumerate(s, heights);
  std::sort(pts.last_coordinate.begin(), pts.last_coordinate.end());
  return std::move(pts.last_coordinate);
}

GradedPolynomial hstar_simplex(const HalfOpenSimplex& s, std::int64_t q) {
  const auto pts = fpp_enumerate(s, std::vector<std::int64_t>(s.vertices.size(), q));
  std::vector<Integer> coeffs;
  for (auto h : pts.last_coordinate) {
    if (static_cast<std::size_t>(h) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(h) + 1, Integer(0));
    ++coeffs[static_cast<std::size_t>(h)];
  }
  return GradedPolynomial(std::move(coeffs));
}

GradedPolynomial hstar_polytope(const Polytope& p, const HstarOptions& options) {
  require_full_dimensional(p);
  const std::int64_t m = resolve_period(p, options.period);
  if (p.dim() == 0) return GradedPolynomial{1};
  const ConeTriangulation t = vertex_cone_triangulation(p, options.seed);
  GradedPolynomial sum;
  for (const auto& cell : t.cells) sum += hstar_simplex(cell, m);
  return sum;
}

GradedPolynomial hstar_boundary(const Polytope& p, const HstarOptions& options) {
  require_full_dimensional(p);
  const std::int64_t m = resolve_period(p, options.period);
  const HalfOpenDecomposition dec = boundary_decomposition(p, TriangulationOptions{options.apex, options.seed});
  GradedPolynomial sum;
  for (const auto& s : dec.boundary.simplices) sum += hstar_simplex(s, m);
  return sum;
}

GradedPolynomial hstar_interior(const Polytope& p, const HstarOptions& options) {
  const std::int64_t m = resolve_period(p, options.period);
  return hstar_polytope(p, options).reversed(m * static_cast<std::int64_t>(p.dim() + 1));
}

std::vector<Integer> SeriesForm::expand(std::size_t count) const {
  std::vector<Integer> out(count, Integer(0));
  for (std::size_t i = 0; i < count && i < numerator.coefficients().size(); ++i) out[i] = numerator.coefficients()[i];
  // Divide by (1 - z^e) `power` times: running sums with stride e.
  const auto e = static_cast<std::size_t>(exponent);
  for (std::int64_t k = 0; k < power; ++k) {
    for (std::size_t i = e; i < count; ++i) out[i] += out[i - e];
  }
  return out;
}

SeriesForm ehrhart_series(const Polytope& p) {
  return SeriesForm{hstar_polytope(p), p.denominator(), static_cast<std::int64_t>(p.dim() + 1)};
}

SeriesForm boundary_series(const Polytope& p) {
  return SeriesForm{hstar_boundary(p), p.denominator(), static_cast<std::int64_t>(p.dim())};
}

Rational QuasiCoefficients::coefficient(std::size_t i, std::int64_t n) const {
  const auto& period = k.at(i);
  const auto len = static_cast<std::int64_t>(period.size());
  return period[static_cast<std::size_t>(((n % len) + len) % len)];
}

Rational QuasiCoefficients::evaluate(std::int64_t n) const {
  Rational sum = 0;
  Rational power = 1;
  for (std::size_t i = 0; i < k.size(); ++i, power *= n) sum += coefficient(i, n) * power;
  return sum;
}

QuasiCoefficients quasi_coefficients(const Polytope& p) {
  require_full_dimensional(p);
  const std::int64_t q = p.denominator();
  const std::size_t d = p.dim();
  const auto counts = ehrhart_series(p).expand(static_cast<std::size_t>(q) * (d + 1) + 1);

  std::vector<std::vector<Rational>> by_residue(d + 1, std::vector<Rational>(static_cast<std::size_t>(q)));
  for (std::int64_t r = 0; r < q; ++r) {
    // d+1 sample points n = r', r'+q, ... with n >= 1 and n = r mod q.
    const std::int64_t first = r == 0 ? q : r;
    RationalMatrix vander(d + 1, d + 1);
    std::vector<Rational> values(d + 1);
    for (std::size_t s = 0; s <= d; ++s) {
      const std::int64_t n = first + static_cast<std::int64_t>(s) * q;
      Rational power = 1;
      for (std::size_t i = 0; i <= d; ++i, power *= n) vander(s, i) = power;
      values[s] = counts[static_cast<std::size_t>(n)];
    }
    auto coeffs = solve(std::move(vander), std::move(values));
    if (!coeffs) throw Error(ErrorKind::InvariantViolated, "interpolation failed");
    for (std::size_t i = 0; i <= d; ++i) by_residue[i][static_cast<std::size_t>(r)] = (*coeffs)[i];
  }
  QuasiCoefficients out;
  for (auto& values : by_residue) out.k.push_back(minimal_period(std::move(values)));
  return out;
}

}  // namespace hstar
