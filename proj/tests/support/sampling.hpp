#pragma once

#include <random>
#include <vector>

#include "hstar/arith.hpp"
#include "hstar/geometry.hpp"

namespace hstar::fixtures {

// Convex combination with small integer weights, zeros allowed, so that
// samples land on lower-dimensional faces often.
inline Point random_combination(const std::vector<Point>& pts, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> w(0, 3);
  std::vector<int> weights(pts.size());
  int total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : weights) total += (x = w(rng));
  }
  Point out(pts.front().size(), Rational(0));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += pts[i][c] * weights[i];
  }
  for (auto& c : out) c /= total;
  return out;
}

inline Point sample_in(const Polytope& p, std::mt19937_64& rng) { return random_combination(p.vertices(), rng); }

inline Point sample_on_boundary(const Polytope& p, std::mt19937_64& rng) {
  const auto& fv = p.facet_vertices();
  const auto& facet = fv[rng() % fv.size()];
  std::vector<Point> pts;
  for (auto i : facet) pts.push_back(p.vertices()[i]);
  return random_combination(pts, rng);
}

}  // namespace hstar::fixtures
