#include "hstar/gorenstein.hpp"

#include "hstar/ehrhart.hpp"
#include "hstar/error.hpp"
#include "hstar/triangulation.hpp"

namespace hstar {
namespace {

bool origin_interior(const Polytope& p) {
  for (const auto& h : p.facets()) {
    if (h.offset <= 0) return false;
  }
  return true;
}

// Interior lattice points of a lattice polytope, lexicographic.
std::vector<std::vector<Integer>> interior_lattice_points(const Polytope& p) {
  const std::size_t d = p.dim();
  std::vector<Integer> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = hi[i] = integral_coordinates(p.vertices()[0])[i];
    for (const auto& v : p.vertices()) {
      const Integer c = v[i].get_num();
      if (c < lo[i]) lo[i] = c;
      if (c > hi[i]) hi[i] = c;
    }
  }
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> u(lo);
  while (true) {
    Point x(u.begin(), u.end());
    if (contains(p, x, Containment::interior)) out.push_back(u);
    std::size_t i = d;
    bool done = true;
    while (i > 0) {
      --i;
      if (u[i] < hi[i]) {
        ++u[i];
        done = false;
        break;
      }
      u[i] = lo[i];
    }
    if (done) break;
  }
  return out;
}

}  // namespace

std::string to_string(GorensteinKind kind) {
  switch (kind) {
    case GorensteinKind::reflexive: return "reflexive";
    case GorensteinKind::rational_reflexive: return "rational_reflexive";
    case GorensteinKind::gorenstein: return "gorenstein";
    case GorensteinKind::rational_gorenstein: return "rational_gorenstein";
    case GorensteinKind::none: return "none";
  }
  return "none";
}

std::optional<std::vector<Integer>> reflexive_translate(const Polytope& p) {
  if (!p.is_lattice()) throw Error(ErrorKind::NotLatticePolytope, "reflexivity needs a lattice polytope");
  const auto& facets = p.facets();
  const auto candidates = interior_lattice_points(p);
  if (candidates.size() != 1) return std::nullopt;
  const auto& u = candidates.front();
  for (const auto& h : facets) {
    Integer s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += h.normal[i] * u[i];
    if (h.offset - s != 1) return std::nullopt;
  }
  std::vector<Integer> t;
  for (const auto& c : u) t.push_back(-c);
  return t;
}

bool is_reflexive(const Polytope& p) { return reflexive_translate(p).has_value(); }

bool is_rational_reflexive(const Polytope& p) {
  if (!origin_interior(p)) throw Error(ErrorKind::OriginNotInterior, "origin is not interior");
  for (const auto& h : p.facets()) {
    if (h.offset != 1) return false;
  }
  return true;
}

bool has_lattice_facet_hyperplanes(const Polytope& p) {
  for (const auto& h : p.facets()) {
    Integer g = 0;
    for (const auto& c : h.normal) g = gcd(g, c);
    if (g != 1) return false;
  }
  return true;
}

std::optional<std::int64_t> gorenstein_search(const Polytope& p) {
  if (!p.is_full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "classification needs full dimension");
  const std::int64_t q = p.denominator();
  const std::int64_t top = q * static_cast<std::int64_t>(p.dim() + 1);
  for (std::int64_t g = 1; g <= top; ++g) {
    const Polytope gp = dilate(p, Rational(g));
    if (!gp.is_lattice()) continue;
    if (is_reflexive(gp)) return g;
  }
  return std::nullopt;
}

GorensteinStatus gorenstein_index(const Polytope& p) {
  if (!p.is_full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "classification needs full dimension");
  GorensteinStatus out;
  const std::int64_t q = p.denominator();
  // gP reflexive forces q | g, and gP = (g/q)(qP) has a unique interior point,
  // so g/q is the least interior dilate of the lattice polytope qP.
  const Polytope lattice = dilate(p, Rational(q));
  const std::int64_t g = q * find_interior_point(lattice).ell;
  const Polytope gp = dilate(p, Rational(g));
  if (auto t = reflexive_translate(gp)) {
    out.g = g;
    out.translate = std::move(t);
  }
  out.rational_reflexive = origin_interior(p) && is_rational_reflexive(p);

  if (p.is_lattice() && out.g == 1) {
    out.kind = GorensteinKind::reflexive;
  } else if (out.g) {
    out.kind = p.is_lattice() ? GorensteinKind::gorenstein : GorensteinKind::rational_gorenstein;
  } else if (out.rational_reflexive) {
    out.kind = GorensteinKind::rational_reflexive;
  }
  return out;
}

GorensteinReport verify_gorenstein_identities(const Polytope& p) {
  GorensteinReport r;
  r.status = gorenstein_index(p);
  r.hstar = hstar_polytope(p);
  r.boundary = hstar_boundary(p);
  const std::int64_t q = p.denominator();
  const auto geo_q = GradedPolynomial::geometric(q);

  if (r.status.rational_reflexive) {
    r.checks.push_back({"hstar_equals_geometric_q_times_boundary", r.hstar, geo_q * r.boundary, false});
    // Pyramids over boundary simplices with apex at the origin gain no lattice points.
    const HalfOpenDecomposition dec = boundary_decomposition(p, {Point(p.dim(), Rational(0)), 0});
    std::vector<std::int64_t> heights(p.dim() + 1, q);
    heights.back() = 1;
    GradedPolynomial base, pyr;
    for (const auto& s : dec.boundary.simplices) {
      base += hstar_simplex(s, q);
      for (auto h : fpp_points(pyramid(Point(p.dim(), Rational(0)), s), heights)) pyr += GradedPolynomial::monomial(h);
    }
    r.checks.push_back({"pyramid_parallelepipeds_equal", pyr, base, false});
  }
  if (r.status.g) {
    const std::int64_t g = *r.status.g;
    const auto geo_g = GradedPolynomial::geometric(g);
    if (p.is_lattice() && g == 1) {
      r.checks.push_back({"hstar_equals_boundary", r.hstar, r.boundary, false});
    } else if (p.is_lattice()) {
      r.checks.push_back({"boundary_equals_geometric_g_times_hstar", r.boundary, geo_g * r.hstar, false});
    } else if (has_lattice_facet_hyperplanes(p)) {
      r.checks.push_back({"geometric_g_hstar_equals_geometric_q_boundary", geo_g * r.hstar, geo_q * r.boundary, false});
    } else {
      r.skipped.push_back("geometric_g_hstar_equals_geometric_q_boundary: facet hyperplanes are not lattice hyperplanes");
    }
  }
  if (!r.checks.empty()) {
    r.checks.push_back({"hstar_palindromic", r.hstar, r.hstar.reversed(r.hstar.degree_index()), false});
  }
  for (auto& c : r.checks) {
    c.passed = c.lhs == c.rhs;
    if (!c.passed) {
      throw Error(ErrorKind::IdentityViolated, c.name + ": " + c.lhs.to_string() + " != " + c.rhs.to_string());
    }
  }
  return r;
}

}  // namespace hstar
