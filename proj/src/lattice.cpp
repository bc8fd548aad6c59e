#include "hstar/lattice.hpp"

#include "hstar/error.hpp"

namespace hstar {
namespace {

constexpr std::int64_t kMaxParallelepipedPoints = 50'000'000;

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

Diagonalization diagonalize(IntegerMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntegerMatrix column = IntegerMatrix::identity(n);
  IntegerMatrix row_inverse = IntegerMatrix::identity(m);

  // row_i += f * row_j on A corresponds to col_j -= f * col_i on the inverse transform.
  auto add_row = [&](std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t c = 0; c < n; ++c) a(i, c) += f * a(j, c);
    for (std::size_t r = 0; r < m; ++r) row_inverse(r, j) -= f * row_inverse(r, i);
  };
  auto add_col = [&](std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t r = 0; r < m; ++r) a(r, i) += f * a(r, j);
    for (std::size_t r = 0; r < n; ++r) column(r, i) += f * column(r, j);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t best_r = m, best_c = n;
      for (std::size_t r = t; r < m; ++r) {
        for (std::size_t c = t; c < n; ++c) {
          if (a(r, c) == 0) continue;
          if (best_r == m || abs(a(r, c)) < abs(a(best_r, best_c))) {
            best_r = r;
            best_c = c;
          }
        }
      }
      if (best_r == m) {
        return Diagonalization{std::move(a), std::move(column), std::move(row_inverse), t};
      }
      if (best_r != t) {
        a.swap_rows(best_r, t);
        row_inverse.swap_cols(best_r, t);
      }
      if (best_c != t) {
        a.swap_cols(best_c, t);
        column.swap_cols(best_c, t);
      }
      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (a(r, t) == 0) continue;
        add_row(r, t, -floor_div(a(r, t), a(t, t)));
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (a(t, c) == 0) continue;
        add_col(c, t, -floor_div(a(t, c), a(t, t)));
        if (a(t, c) != 0) clean = false;
      }
      if (clean) break;
    }
  }
  return Diagonalization{std::move(a), std::move(column), std::move(row_inverse), t};
}

IntegerMatrix saturation_basis(const IntegerMatrix& a) {
  const Diagonalization diag = diagonalize(a);
  IntegerMatrix basis(a.rows(), diag.rank);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < diag.rank; ++c) basis(r, c) = diag.row_inverse(r, c);
  }
  return basis;
}

Integer lattice_index(const IntegerMatrix& a) {
  const Diagonalization diag = diagonalize(a);
  if (diag.rank != a.cols()) {
    throw Error(ErrorKind::AffinelyDependent, "generators are linearly dependent");
  }
  Integer index = 1;
  for (std::size_t i = 0; i < diag.rank; ++i) index *= abs(diag.diagonal(i, i));
  return index;
}

ParallelepipedPoints parallelepiped_points(const IntegerMatrix& generators, const std::vector<bool>& open) {
  const std::size_t k = generators.cols();
  if (open.size() != k) throw Error(ErrorKind::InvariantViolated, "open mask length mismatch");
  const Diagonalization diag = diagonalize(generators);
  if (diag.rank != k) throw Error(ErrorKind::AffinelyDependent, "generators are linearly dependent");

  // Coefficient vectors of lattice points form column * diag^{-1} Z^k modulo Z^k.
  std::vector<Integer> orders(k);
  Integer common = 1;
  Integer total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    orders[i] = abs(diag.diagonal(i, i));
    common = lcm(common, orders[i]);
    total *= orders[i];
  }
  if (total > kMaxParallelepipedPoints) {
    throw Error(ErrorKind::BoxTooLarge, "parallelepiped holds " + total.get_str() + " lattice points");
  }
  const std::int64_t den = to_int64(common);

  // steps[i][j]: numerator (over den) contributed to coefficient j by one unit of residue i.
  std::vector<std::vector<std::int64_t>> steps(k, std::vector<std::int64_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const Integer unit = common / orders[i];
    for (std::size_t j = 0; j < k; ++j) steps[i][j] = to_int64(mod_positive(diag.column(j, i) * unit, common));
  }
  std::vector<std::int64_t> heights(k);
  const std::size_t last = generators.rows() - 1;
  for (std::size_t j = 0; j < k; ++j) heights[j] = to_int64(generators(last, j));

  std::vector<std::int64_t> order64(k);
  for (std::size_t i = 0; i < k; ++i) order64[i] = to_int64(orders[i]);

  ParallelepipedPoints out;
  out.denominator = den;
  const auto count = static_cast<std::size_t>(to_int64(total));
  out.numerators.reserve(count);
  out.last_coordinate.reserve(count);

  std::vector<std::int64_t> residue(k, 0);
  std::vector<std::int64_t> acc(k, 0);
  while (true) {
    std::vector<std::int64_t> coeffs(acc);
    __int128 weighted = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (open[j] && coeffs[j] == 0) coeffs[j] = den;
      weighted += static_cast<__int128>(coeffs[j]) * heights[j];
    }
    if (weighted % den != 0) {
      throw Error(ErrorKind::InvariantViolated, "parallelepiped point with fractional height");
    }
    out.last_coordinate.push_back(static_cast<std::int64_t>(weighted / den));
    out.numerators.push_back(std::move(coeffs));

    // Mixed-radix increment of the residue vector.
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++residue[i] < order64[i]) {
        for (std::size_t j = 0; j < k; ++j) acc[j] = (acc[j] + steps[i][j]) % den;
        break;
      }
      residue[i] = 0;
      for (std::size_t j = 0; j < k; ++j) {
        const __int128 back = static_cast<__int128>(steps[i][j]) * (order64[i] - 1);
        acc[j] = static_cast<std::int64_t>(((acc[j] - back) % den + den) % den);
      }
    }
    if (i == k) break;
  }
  return out;
}

}  // namespace hstar
