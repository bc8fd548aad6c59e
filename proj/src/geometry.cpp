#include "hstar/geometry.hpp"

#include <algorithm>

#include "hstar/error.hpp"
#include "hstar/lattice.hpp"
#include "hstar/matrix.hpp"

namespace hstar {
namespace {

struct HullFacet {
  Halfspace halfspace;
  std::vector<std::size_t> incident;  // sorted point indices lying on the hyperplane
};

struct Hull {
  std::vector<std::size_t> vertices;  // sorted point indices
  std::vector<HullFacet> facets;
};

std::vector<Point> gather(const std::vector<Point>& points, const std::vector<std::size_t>& ids) {
  std::vector<Point> out;
  out.reserve(ids.size());
  for (auto i : ids) out.push_back(points[i]);
  return out;
}

std::vector<std::size_t> incident_points(const std::vector<Point>& points, const std::vector<std::size_t>& candidates,
                                         const Halfspace& h) {
  std::vector<std::size_t> out;
  for (auto i : candidates) {
    if (h.slack(points[i]) == 0) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Beneath-beyond insertion; `points` must be distinct and span R^k.
Hull beneath_beyond(const std::vector<Point>& points, std::size_t k) {
  std::vector<std::size_t> simplex;
  {
    std::vector<Point> chosen;
    for (std::size_t i = 0; i < points.size() && simplex.size() < k + 1; ++i) {
      chosen.push_back(points[i]);
      if (affine_rank(chosen) == chosen.size()) {
        simplex.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
  }
  if (simplex.size() != k + 1) throw Error(ErrorKind::NotFullDimensional, "points do not span the space");
  const std::vector<Point> simplex_points = gather(points, simplex);
  const Point inside = centroid(simplex_points);

  std::vector<std::size_t> processed = simplex;
  std::vector<HullFacet> facets;
  for (std::size_t skip = 0; skip <= k; ++skip) {
    std::vector<Point> others;
    for (std::size_t j = 0; j <= k; ++j) {
      if (j != skip) others.push_back(simplex_points[j]);
    }
    Halfspace h = hyperplane_through(others, inside);
    auto inc = incident_points(points, processed, h);
    facets.push_back({std::move(h), std::move(inc)});
  }

  std::vector<bool> in_simplex(points.size(), false);
  for (auto i : simplex) in_simplex[i] = true;

  for (std::size_t p = 0; p < points.size(); ++p) {
    if (in_simplex[p]) continue;
    processed.push_back(p);
    std::vector<int> side(facets.size());
    bool any_visible = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      const Rational s = facets[f].halfspace.slack(points[p]);
      side[f] = sgn(s);
      if (side[f] > 0) any_visible = true;
    }
    if (!any_visible) {
      for (std::size_t f = 0; f < facets.size(); ++f) {
        if (side[f] == 0) facets[f].incident.insert(
            std::upper_bound(facets[f].incident.begin(), facets[f].incident.end(), p), p);
      }
      continue;
    }

    std::vector<Halfspace> created;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (side[f] <= 0) continue;
      for (std::size_t g = 0; g < facets.size(); ++g) {
        if (side[g] > 0) continue;
        std::vector<std::size_t> ridge;
        std::set_intersection(facets[f].incident.begin(), facets[f].incident.end(), facets[g].incident.begin(),
                              facets[g].incident.end(), std::back_inserter(ridge));
        std::vector<Point> ridge_points = gather(points, ridge);
        if (affine_rank(ridge_points) != k - 1) continue;
        ridge_points.push_back(points[p]);
        Halfspace h = hyperplane_through(ridge_points, inside);
        if (std::find(created.begin(), created.end(), h) == created.end()) created.push_back(std::move(h));
      }
    }

    std::vector<HullFacet> next;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (side[f] > 0) continue;
      if (side[f] == 0) {
        facets[f].incident.insert(std::upper_bound(facets[f].incident.begin(), facets[f].incident.end(), p), p);
      }
      next.push_back(std::move(facets[f]));
    }
    for (auto& h : created) {
      const bool known = std::any_of(next.begin(), next.end(), [&](const HullFacet& f) { return f.halfspace == h; });
      if (known) continue;
      auto inc = incident_points(points, processed, h);
      next.push_back({std::move(h), std::move(inc)});
    }
    facets = std::move(next);
  }

  // A point is a vertex iff the normals of the facets through it have full rank.
  std::vector<std::vector<std::vector<Rational>>> normals_at(points.size());
  for (const auto& f : facets) {
    std::vector<Rational> n(f.halfspace.normal.begin(), f.halfspace.normal.end());
    for (auto i : f.incident) normals_at[i].push_back(n);
  }
  Hull hull;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (normals_at[i].size() >= k && rank(from_rows(normals_at[i], k)) == k) hull.vertices.push_back(i);
  }
  hull.facets = std::move(facets);
  return hull;
}

}  // namespace

Rational Halfspace::slack(const Point& x) const { return dot(normal, x) - Rational(offset); }

Halfspace normalize_halfspace(const std::vector<Rational>& normal, const Rational& offset) {
  Integer den = offset.get_den();
  for (const auto& c : normal) den = lcm(den, c.get_den());
  Halfspace h;
  h.normal.reserve(normal.size());
  for (const auto& c : normal) h.normal.push_back(Rational(c * den).get_num());
  h.offset = Rational(offset * den).get_num();
  Integer g = abs(h.offset);
  for (const auto& c : h.normal) g = gcd(g, c);
  if (g == 0) throw Error(ErrorKind::InvariantViolated, "zero normal vector");
  for (auto& c : h.normal) c /= g;
  h.offset /= g;
  return h;
}

std::size_t affine_rank(std::span<const Point> points) {
  if (points.empty()) return 0;
  const std::size_t d = points.front().size();
  RationalMatrix m(points.size() - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i) {
    for (std::size_t c = 0; c < d; ++c) m(i - 1, c) = points[i][c] - points[0][c];
  }
  return rank(std::move(m)) + 1;
}

Point centroid(std::span<const Point> points) {
  Point c(points.front().size(), Rational(0));
  for (const auto& p : points) c = add(c, p);
  return scale(c, Rational(1, static_cast<long>(points.size())));
}

Halfspace hyperplane_through(std::span<const Point> points, const Point& inside) {
  const std::size_t d = inside.size();
  RationalMatrix m(points.size() - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i) {
    for (std::size_t c = 0; c < d; ++c) m(i - 1, c) = points[i][c] - points[0][c];
  }
  auto kernel = nullspace(std::move(m));
  if (kernel.size() != 1) throw Error(ErrorKind::AffinelyDependent, "points do not span a hyperplane");
  std::vector<Rational> normal = std::move(kernel.front());
  Rational offset = dot(normal, points[0]);
  const Rational at_inside = dot(normal, inside);
  if (at_inside == offset) throw Error(ErrorKind::NotGeneric, "reference point lies on the hyperplane");
  if (at_inside > offset) {
    for (auto& c : normal) c = -c;
    offset = -offset;
  }
  return normalize_halfspace(normal, offset);
}

Polytope build_polytope(std::vector<Point> points) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points given");
  const std::size_t d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) throw Error(ErrorKind::MixedDimensions, "points have different lengths");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope out;
  out.ambient_dim_ = d;
  const std::size_t r = affine_rank(points);
  out.dim_ = r - 1;
  const std::size_t k = out.dim_;

  if (k == 0) {
    out.vertices_ = {points.front()};
  } else if (k == d) {
    Hull hull = beneath_beyond(points, d);
    std::vector<std::size_t> position(points.size(), 0);
    for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
      position[hull.vertices[i]] = i;
      out.vertices_.push_back(points[hull.vertices[i]]);
    }
    std::sort(hull.facets.begin(), hull.facets.end(),
              [](const HullFacet& a, const HullFacet& b) { return a.halfspace < b.halfspace; });
    std::vector<bool> is_vertex(points.size(), false);
    for (auto v : hull.vertices) is_vertex[v] = true;
    for (auto& f : hull.facets) {
      std::vector<std::size_t> ids;
      for (auto i : f.incident) {
        if (is_vertex[i]) ids.push_back(position[i]);
      }
      out.facets_.push_back(std::move(f.halfspace));
      out.facet_vertices_.push_back(std::move(ids));
    }
  } else {
    // Project onto coordinates that are independent on the affine hull.
    RationalMatrix diffs(points.size() - 1, d);
    for (std::size_t i = 1; i < points.size(); ++i) {
      for (std::size_t c = 0; c < d; ++c) diffs(i - 1, c) = points[i][c] - points[0][c];
    }
    const auto cols = pivot_columns(std::move(diffs));
    std::vector<Point> projected;
    projected.reserve(points.size());
    for (const auto& p : points) {
      Point q;
      for (auto c : cols) q.push_back(p[c]);
      projected.push_back(std::move(q));
    }
    Hull hull = beneath_beyond(projected, k);
    std::vector<Point> verts;
    for (auto v : hull.vertices) verts.push_back(points[v]);
    std::sort(verts.begin(), verts.end());
    out.vertices_ = std::move(verts);
  }
  out.denominator_ = to_int64(denominator_of(out.vertices_));
  return out;
}

const std::vector<Halfspace>& Polytope::facets() const {
  if (!is_full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional, "polytope of dimension " + std::to_string(dim_) +
                                                   " in ambient dimension " + std::to_string(ambient_dim_));
  }
  return facets_;
}

const std::vector<std::vector<std::size_t>>& Polytope::facet_vertices() const {
  facets();
  return facet_vertices_;
}

const std::vector<Halfspace>& facet_description(const Polytope& p) { return p.facets(); }

bool contains(const Polytope& p, const Point& x, Containment mode) {
  if (x.size() != p.ambient_dim()) throw Error(ErrorKind::MixedDimensions, "point has wrong length");
  bool on_some = false;
  for (const auto& h : p.facets()) {
    const int s = sgn(h.slack(x));
    if (s > 0) return false;
    if (s == 0) on_some = true;
  }
  switch (mode) {
    case Containment::closed: return true;
    case Containment::interior: return !on_some;
    case Containment::boundary: return on_some;
  }
  return false;
}

Polytope dilate(const Polytope& p, const Rational& t) {
  if (t <= 0) throw Error(ErrorKind::NonpositiveScale, "dilation factor " + t.get_str() + " is not positive");
  std::vector<Point> v;
  for (const auto& x : p.vertices()) v.push_back(scale(x, t));
  return build_polytope(std::move(v));
}

Polytope translate(const Polytope& p, const Point& shift) {
  std::vector<Point> v;
  for (const auto& x : p.vertices()) v.push_back(add(x, shift));
  return build_polytope(std::move(v));
}

Polytope dual(const Polytope& p) {
  std::vector<Point> v;
  for (const auto& h : p.facets()) {
    if (h.offset <= 0) throw Error(ErrorKind::OriginNotInterior, "origin is not in the interior");
    Point y;
    for (const auto& c : h.normal) y.push_back(Rational(c, h.offset));
    for (auto& c : y) c.canonicalize();
    v.push_back(std::move(y));
  }
  return build_polytope(std::move(v));
}

Polytope project_to_affine_hull(const Polytope& p) {
  if (p.is_full_dimensional()) return p;
  const std::size_t d = p.ambient_dim();
  const std::size_t n = p.vertices().size();
  const Integer q = p.denominator();

  IntegerMatrix cone(d + 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < d; ++i) cone(i, j) = Rational(p.vertices()[j][i] * q).get_num();
    cone(d, j) = q;
  }
  const IntegerMatrix basis = saturation_basis(cone);
  const std::size_t k1 = basis.cols();

  IntegerMatrix height(1, k1);
  Integer g = 0;
  for (std::size_t j = 0; j < k1; ++j) {
    height(0, j) = basis(d, j);
    g = gcd(g, basis(d, j));
  }
  if (g != 1) {
    throw Error(ErrorKind::NoSolution, "affine hull meets the lattice only in dilates divisible by " + g.get_str());
  }
  // Unimodular change of basis whose last row is the height functional.
  const Diagonalization diag = diagonalize(height);
  RationalMatrix col(k1, k1);
  for (std::size_t r = 0; r < k1; ++r) {
    for (std::size_t c = 0; c < k1; ++c) col(r, c) = diag.column(r, c);
  }
  const RationalMatrix col_inv = inverse(col);
  const Rational sign = Rational(diag.row_inverse(0, 0) * diag.diagonal(0, 0));
  RationalMatrix change(k1, k1);
  for (std::size_t c = 0; c < k1; ++c) change(k1 - 1, c) = sign * col_inv(0, c);
  for (std::size_t r = 1; r < k1; ++r) {
    for (std::size_t c = 0; c < k1; ++c) change(r - 1, c) = col_inv(r, c);
  }

  RationalMatrix basis_q(d + 1, k1);
  for (std::size_t r = 0; r <= d; ++r) {
    for (std::size_t c = 0; c < k1; ++c) basis_q(r, c) = basis(r, c);
  }
  std::vector<Point> projected;
  for (const auto& v : p.vertices()) {
    std::vector<Rational> lifted(v);
    lifted.push_back(1);
    auto y = solve(basis_q, lifted);
    if (!y) throw Error(ErrorKind::InvariantViolated, "vertex outside its own affine hull");
    Point z(k1 - 1);
    for (std::size_t r = 0; r + 1 < k1; ++r) z[r] = dot(change.row(r), *y);
    if (dot(change.row(k1 - 1), *y) != 1) throw Error(ErrorKind::InvariantViolated, "height functional mismatch");
    projected.push_back(std::move(z));
  }
  return build_polytope(std::move(projected));
}

}  // namespace hstar
