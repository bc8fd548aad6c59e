#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "hstar/arith.hpp"
#include "hstar/matrix.hpp"

namespace hstar::fixtures {

// Half-open parallelepiped points by scanning the integer bounding box and
// solving for coefficients. Slow, independent of the diagonalization route.
// Returns a histogram of the last coordinate.
inline std::map<long, long> bbox_parallelepiped_heights(const IntegerMatrix& gens, const std::vector<bool>& open) {
  const std::size_t rows = gens.rows();
  const std::size_t k = gens.cols();
  std::vector<Integer> lo(rows, 0), hi(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < k; ++j) {
      if (gens(r, j) < 0) lo[r] += gens(r, j);
      else hi[r] += gens(r, j);
    }
  }
  RationalMatrix a(rows, k);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < k; ++j) a(r, j) = gens(r, j);

  std::map<long, long> hist;
  std::vector<Integer> cur(lo);
  while (true) {
    std::vector<Rational> b(cur.begin(), cur.end());
    if (auto lambda = solve(a, b)) {
      bool inside = true;
      for (std::size_t j = 0; j < k && inside; ++j) {
        const Rational& l = (*lambda)[j];
        inside = open[j] ? (l > 0 && l <= 1) : (l >= 0 && l < 1);
      }
      if (inside) ++hist[cur.back().get_si()];
    }
    std::size_t r = 0;
    for (; r < rows; ++r) {
      if (cur[r] < hi[r]) {
        ++cur[r];
        break;
      }
      cur[r] = lo[r];
    }
    if (r == rows) break;
  }
  return hist;
}

}  // namespace hstar::fixtures
