#include "hstar/oracle.hpp"

#include "hstar/error.hpp"

namespace hstar::oracle {
namespace {

constexpr std::int64_t kMaxCandidates = 100'000'000;

}  // namespace

Integer count_points(const Polytope& p, std::int64_t n, Containment mode) {
  const auto& facets = p.facets();
  const std::size_t d = p.dim();
  if (n < 1) throw Error(ErrorKind::InvariantViolated, "dilate must be positive");

  std::vector<std::int64_t> lo(d), hi(d);
  __int128 candidates = 1;
  for (std::size_t i = 0; i < d; ++i) {
    Rational mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = to_int64(hstar::ceil(mn * n));
    hi[i] = to_int64(hstar::floor(mx * n));
    if (lo[i] > hi[i]) return 0;
    candidates *= hi[i] - lo[i] + 1;
    if (candidates > kMaxCandidates) {
      throw Error(ErrorKind::BoxTooLarge, "bounding box of dilate " + std::to_string(n) + " is too large");
    }
  }
  std::vector<std::vector<std::int64_t>> normals;
  std::vector<__int128> bounds;
  for (const auto& h : facets) {
    std::vector<std::int64_t> a;
    for (const auto& c : h.normal) a.push_back(to_int64(c));
    normals.push_back(std::move(a));
    bounds.push_back(static_cast<__int128>(to_int64(h.offset)) * n);
  }

  std::int64_t count = 0;
  std::vector<std::int64_t> u(lo);
  while (true) {
    bool inside = true;
    bool on_boundary = false;
    for (std::size_t f = 0; f < normals.size(); ++f) {
      __int128 s = 0;
      for (std::size_t i = 0; i < d; ++i) s += static_cast<__int128>(normals[f][i]) * u[i];
      if (s > bounds[f]) {
        inside = false;
        break;
      }
      if (s == bounds[f]) on_boundary = true;
    }
    if (inside) {
      if (mode == Containment::closed || (mode == Containment::interior) != on_boundary) ++count;
    }
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (u[i] < hi[i]) {
        ++u[i];
        break;
      }
      u[i] = lo[i];
    }
    if (i == d) break;
  }
  return Integer(static_cast<long>(count));
}

std::vector<Integer> count_sequence(const Polytope& p, std::int64_t max_n, Containment mode) {
  std::vector<Integer> out;
  out.emplace_back(mode == Containment::interior ? 0 : 1);
  for (std::int64_t n = 1; n <= max_n; ++n) out.push_back(count_points(p, n, mode));
  return out;
}

GradedPolynomial hstar_from_counts(const Polytope& p, Containment mode) {
  const std::int64_t q = p.denominator();
  const auto d = static_cast<std::int64_t>(p.dim());
  const std::int64_t terms = q * (d + 1) + d + 2;
  std::vector<Integer> c = count_sequence(p, terms - 1, mode);

  const std::int64_t power = mode == Containment::boundary ? d : d + 1;
  for (std::int64_t k = 0; k < power; ++k) {
    for (std::int64_t i = terms - 1; i >= q; --i) c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - q)];
  }
  // Highest index allowed to be nonzero.
  std::int64_t top = q * (d + 1) - 1;
  if (mode == Containment::interior) top = q * (d + 1);
  if (mode == Containment::boundary) top = q * d;
  for (std::int64_t i = top + 1; i < terms; ++i) {
    if (c[static_cast<std::size_t>(i)] != 0) {
      throw Error(ErrorKind::TailNonzero, "series coefficient " + std::to_string(i) + " is " +
                                              c[static_cast<std::size_t>(i)].get_str() + " after multiplication");
    }
  }
  c.resize(static_cast<std::size_t>(top + 1));
  return GradedPolynomial(std::move(c));
}

}  // namespace hstar::oracle
