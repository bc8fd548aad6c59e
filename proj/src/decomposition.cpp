#include "hstar/decomposition.hpp"

#include "hstar/ehrhart.hpp"
#include "hstar/error.hpp"
#include "hstar/triangulation.hpp"

namespace hstar {
namespace {

Integer binomial(const Integer& n, std::size_t k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

Integer partial_sum(const GradedPolynomial& h, std::int64_t from, std::int64_t to) {
  Integer s = 0;
  for (std::int64_t i = from; i <= to; ++i) s += h.coefficient(i);
  return s;
}

}  // namespace

SymmetricDecomposition symmetric_decompose(const GradedPolynomial& h, std::int64_t q, std::int64_t ell,
                                           std::size_t d) {
  if (q < 1 || ell < 1) throw Error(ErrorKind::NoSolution, "q and ell must be positive");
  const std::int64_t grid = h.grid();
  SymmetricDecomposition out;
  out.lhs = (h * GradedPolynomial::geometric(ell, grid)).divided_by(GradedPolynomial::geometric(q, grid));
  const std::int64_t n = q * static_cast<std::int64_t>(d);
  if (out.lhs.degree_index() > n) {
    throw Error(ErrorKind::NoSolution, "degree " + std::to_string(out.lhs.degree_index()) + " exceeds " +
                                           std::to_string(n));
  }
  // With a_i = a_(n-i) and b_i = b_(n-ell-i): p_i = a_i + b_(i-ell) and p_(n-i) = a_i + b_i.
  std::vector<Integer> a(static_cast<std::size_t>(n) + 1, Integer(0));
  std::vector<Integer> b(static_cast<std::size_t>(n) + 1, Integer(0));
  for (std::int64_t i = 0; i <= n; ++i) {
    a[i] = out.lhs.coefficient(i) - (i >= ell ? b[i - ell] : Integer(0));
    if (i <= n - ell) b[i] = out.lhs.coefficient(n - i) - a[i];
  }
  out.a = GradedPolynomial(std::move(a), grid);
  out.b = GradedPolynomial(std::move(b), grid);
  const bool ok = out.a.is_palindromic_about(n) && (out.b.is_zero() || out.b.is_palindromic_about(n - ell)) &&
                  out.a + out.b.shifted(ell) == out.lhs;
  if (!ok) throw Error(ErrorKind::NoSolution, "no palindromic split of " + out.lhs.to_string());
  return out;
}

DecompositionReport decomposition_report(const Polytope& p, const DecompositionOptions& options) {
  if (!p.is_full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "decomposition needs full dimension");
  DecompositionReport r;
  r.q = resolve_period(p, options.period);
  r.d = p.dim();
  const InteriorPoint ip = find_interior_point(p);
  r.ell = ip.ell;
  r.apex = ip.x;

  r.hstar = hstar_polytope(p, {r.q, options.seed, {}});
  r.s_degree = r.hstar.degree_index();
  const std::int64_t top = r.q * static_cast<std::int64_t>(r.d + 1);
  if (r.ell != top - r.s_degree) {
    throw Error(ErrorKind::InvariantViolated, "interior dilate " + std::to_string(r.ell) + " but degree of h* is " +
                                                  std::to_string(r.s_degree));
  }

  const HalfOpenDecomposition dec = boundary_decomposition(p, {r.apex, options.seed});
  std::vector<std::int64_t> heights(r.d + 1, r.q);
  heights.back() = r.ell;
  GradedPolynomial beta_zero;
  std::vector<Integer> b_coeffs;
  for (const auto& s : dec.boundary.simplices) {
    r.boundary += hstar_simplex(s, r.q);
    const HalfOpenSimplex pyr = pyramid(r.apex, s);
    const auto pts = fpp_enumerate(pyr, heights);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::int64_t h = pts.last_coordinate[i];
      if (pts.numerators[i].back() == 0) {
        beta_zero += GradedPolynomial::monomial(h);
        continue;
      }
      if (h < r.ell) {
        throw Error(ErrorKind::InvariantViolated, "pyramid point of height " + std::to_string(h) + " below " +
                                                      std::to_string(r.ell));
      }
      const auto k = static_cast<std::size_t>(h - r.ell);
      if (k >= b_coeffs.size()) b_coeffs.resize(k + 1, Integer(0));
      ++b_coeffs[k];
    }
  }
  r.b_pyramid = GradedPolynomial(std::move(b_coeffs));
  if (beta_zero != r.boundary) {
    throw Error(ErrorKind::InvariantViolated, "pyramid points with zero apex coefficient give " +
                                                  beta_zero.to_string() + ", boundary gives " + r.boundary.to_string());
  }
  r.hstar_pyramid = ((r.boundary + r.b_pyramid.shifted(r.ell)) * GradedPolynomial::one_minus(r.q))
                        .divided_by(GradedPolynomial::one_minus(r.ell));

  const SymmetricDecomposition sym = symmetric_decompose(r.hstar, r.q, r.ell, r.d);
  r.lhs = sym.lhs;
  r.a = sym.a;
  r.b = sym.b;
  r.a_equals_boundary = r.a == r.boundary;
  r.pyramid_agrees = r.b == r.b_pyramid && r.hstar_pyramid == r.hstar;
  if (!r.a_equals_boundary) {
    throw Error(ErrorKind::IdentityViolated, "a = " + r.a.to_string() + " but boundary h* = " + r.boundary.to_string());
  }
  if (!r.pyramid_agrees) {
    throw Error(ErrorKind::IdentityViolated, "b = " + r.b.to_string() + " but pyramid route gives " +
                                                 r.b_pyramid.to_string());
  }
  if (!r.a.is_nonnegative() || !r.b.is_nonnegative()) {
    throw Error(ErrorKind::IdentityViolated, "negative coefficient in the decomposition");
  }
  return r;
}

PyramidComparison pyramid_hstar_compare(const Polytope& p, const Point& x) {
  if (!p.is_full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "base must be full-dimensional");
  if (x.size() != p.ambient_dim() + 1) throw Error(ErrorKind::MixedDimensions, "apex must have one more coordinate");
  if (x.back() == 0) throw Error(ErrorKind::ApexInSpan, "apex " + to_string(x) + " lies in the base hyperplane");
  const std::int64_t q = p.denominator();
  const std::int64_t r = to_int64(denominator_of(x));

  PyramidComparison out;
  out.base = hstar_polytope(p);
  const ConeTriangulation t = vertex_cone_triangulation(p);
  std::vector<std::int64_t> heights(p.dim() + 2, q);
  heights.back() = r;
  for (const auto& cell : t.cells) {
    HalfOpenSimplex lifted = cell;
    for (auto& v : lifted.vertices) v.push_back(0);
    const auto pts = fpp_points(pyramid(x, lifted), heights);
    for (auto h : pts) out.pyramid += GradedPolynomial::monomial(h);
  }
  out.leq = coefficientwise_leq(out.base, out.pyramid);
  return out;
}

bool AuditReport::all_passed() const {
  for (const auto& item : items) {
    if (!item.passed && !item.warning_only) return false;
  }
  return true;
}

AuditReport inequality_audit(const Polytope& p) { return inequality_audit(p, decomposition_report(p)); }

AuditReport inequality_audit(const Polytope& p, const DecompositionReport& r) {
  AuditReport out;
  const GradedPolynomial& h = r.hstar;
  const GradedPolynomial& hb = r.boundary;
  const std::int64_t n = r.q * static_cast<std::int64_t>(r.d + 1);
  const std::int64_t d = static_cast<std::int64_t>(r.d);

  {
    AuditItem item{"cumulative_low", true, false, ""};
    for (std::int64_t j = 0; j <= (n - 1) / 2 - 1; ++j) {
      if (partial_sum(h, 0, j + 1) < partial_sum(h, n - 1 - j, n - 1)) {
        item.passed = false;
        item.detail = "fails at j=" + std::to_string(j);
        break;
      }
    }
    out.items.push_back(item);
  }
  {
    AuditItem item{"cumulative_top", true, false, ""};
    const std::int64_t s = r.s_degree;
    for (std::int64_t j = 0; j <= s; ++j) {
      if (partial_sum(h, s - j, s) < partial_sum(h, 0, j)) {
        item.passed = false;
        item.detail = "fails at j=" + std::to_string(j);
        break;
      }
    }
    out.items.push_back(item);
  }
  if (r.ell <= r.q) {
    AuditItem item{"boundary_below_polytope", coefficientwise_leq(hb, h), false, ""};
    if (!item.passed) item.detail = hb.to_string() + " vs " + h.to_string();
    out.items.push_back(item);
  }
  if (p.is_lattice() && r.q == 1) {
    const QuasiCoefficients k = quasi_coefficients(p);
    const Rational lhs = Rational(r.ell * d, 2) * k.k[r.d][0];
    const Rational rhs = k.k[r.d - 1][0];
    out.items.push_back({"leading_coefficients", lhs >= rhs, false,
                         "ell*d/2*k_d = " + lhs.get_str() + ", k_(d-1) = " + rhs.get_str()});

    AuditItem lower{"boundary_lower_bound", hb.coefficient(0) == 1, false, ""};
    for (std::int64_t j = 0; j <= d; ++j) lower.passed = lower.passed && hb.coefficient(j) > 0;
    for (std::int64_t j = 2; j <= d - 1; ++j) lower.passed = lower.passed && hb.coefficient(1) <= hb.coefficient(j);
    if (!lower.passed) lower.detail = hb.to_string();
    out.items.push_back(lower);

    const HalfOpenDecomposition dec = boundary_decomposition(p, {r.apex, 0});
    std::vector<Integer> by_missing(r.d + 1, Integer(0));
    for (const auto& s : dec.boundary.simplices) ++by_missing[s.missing_count()];
    const GradedPolynomial bound(by_missing);
    out.items.push_back({"missing_face_bound", coefficientwise_leq(bound, hb), false, bound.to_string()});

    if (is_unimodular(dec.boundary)) {
      AuditItem chain{"unimodular_chain", hb.coefficient(0) == 1, true, ""};
      for (std::int64_t j = 1; j <= d / 2; ++j) chain.passed = chain.passed && hb.coefficient(j - 1) <= hb.coefficient(j);
      AuditItem binom{"unimodular_binomial", true, true, ""};
      for (std::int64_t j = 1; j <= d; ++j) {
        if (hb.coefficient(j) > binomial(hb.coefficient(1) + j - 1, static_cast<std::size_t>(j))) {
          binom.passed = false;
          binom.detail = "fails at j=" + std::to_string(j);
        }
      }
      out.items.push_back(chain);
      out.items.push_back(binom);
    }
  }
  return out;
}

}  // namespace hstar
