#include "hstar/triangulation.hpp"

#include <algorithm>
#include <random>

#include "hstar/error.hpp"
#include "hstar/lattice.hpp"
#include "hstar/matrix.hpp"

namespace hstar {
namespace {

constexpr int kGenericRetries = 32;

std::vector<Point> gather(const Polytope& p, const IndexSimplex& ids) {
  std::vector<Point> out;
  for (auto i : ids) out.push_back(p.vertices()[i]);
  return out;
}

// Facets of the face spanned by `face` (dimension k), as sorted index sets.
std::vector<IndexSimplex> faces_below(const Polytope& p, const IndexSimplex& face, std::size_t k) {
  std::vector<IndexSimplex> out;
  for (const auto& fv : p.facet_vertices()) {
    IndexSimplex common;
    std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(), std::back_inserter(common));
    if (common.size() < k || common.size() == face.size()) continue;
    if (affine_rank(gather(p, common)) != k) continue;
    if (std::find(out.begin(), out.end(), common) == out.end()) out.push_back(std::move(common));
  }
  return out;
}

void pull(const Polytope& p, const IndexSimplex& face, std::size_t k, std::vector<IndexSimplex>& out) {
  if (face.size() == k + 1) {
    out.push_back(face);
    return;
  }
  const std::size_t v = face.front();
  for (const auto& sub : faces_below(p, face, k)) {
    if (std::binary_search(sub.begin(), sub.end(), v)) continue;
    std::vector<IndexSimplex> pieces;
    pull(p, sub, k - 1, pieces);
    for (auto& s : pieces) {
      s.insert(s.begin(), v);
      out.push_back(std::move(s));
    }
  }
}

std::int64_t find_vertex(const Polytope& p, const Point& x) {
  const auto& v = p.vertices();
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) return it - v.begin();
  return -1;
}

}  // namespace

std::size_t HalfOpenSimplex::missing_count() const {
  return static_cast<std::size_t>(std::count(missing.begin(), missing.end(), true));
}

std::vector<IndexSimplex> triangulate_boundary(const Polytope& p) {
  if (!p.is_full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "boundary triangulation needs full dimension");
  if (p.dim() == 0) throw Error(ErrorKind::DimensionZero, "a point has no boundary");
  std::vector<IndexSimplex> out;
  for (const auto& fv : p.facet_vertices()) pull(p, fv, p.dim() - 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSimplex> pulling_triangulation(const Polytope& p) {
  if (!p.is_full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "triangulation needs full dimension");
  IndexSimplex all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<IndexSimplex> out;
  if (p.dim() == 0) return {all};
  pull(p, all, p.dim(), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Rational>> barycentric(const std::vector<Point>& simplex, const Point& y) {
  const std::size_t d = y.size();
  RationalMatrix a(d + 1, simplex.size());
  for (std::size_t j = 0; j < simplex.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) a(i, j) = simplex[j][i];
    a(d, j) = 1;
  }
  std::vector<Rational> b(y);
  b.push_back(1);
  return solve(std::move(a), std::move(b));
}

std::vector<bool> visibility_mask(const std::vector<Point>& simplex, const Point& y) {
  if (simplex.size() != y.size() + 1) throw Error(ErrorKind::InvariantViolated, "simplex is not full-dimensional");
  auto lambda = barycentric(simplex, y);
  if (!lambda) throw Error(ErrorKind::InvariantViolated, "full-dimensional simplex misses a point's affine hull");
  std::vector<bool> mask(simplex.size());
  for (std::size_t j = 0; j < simplex.size(); ++j) {
    const int s = sgn((*lambda)[j]);
    if (s == 0) throw Error(ErrorKind::NotGeneric, "point " + to_string(y) + " lies on a cell hyperplane");
    mask[j] = s < 0;
  }
  return mask;
}

bool is_generic(const Polytope& p, const std::vector<std::vector<Point>>& cells, const Point& y) {
  if (!contains(p, y, Containment::interior)) return false;
  for (const auto& cell : cells) {
    auto lambda = barycentric(cell, y);
    if (!lambda) return false;
    for (const auto& l : *lambda) {
      if (l == 0) return false;
    }
  }
  return true;
}

Point pick_generic_point(const Polytope& p, const std::vector<std::vector<Point>>& cells, const Point& base,
                         std::uint64_t seed) {
  const std::size_t d = base.size();
  std::vector<long> direction(d, 1);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(1, 5);
    for (auto& c : direction) c = (rng() % 2 ? 1 : -1) * pick(rng);
  }
  Integer m = 64;
  for (int attempt = 0; attempt < kGenericRetries; ++attempt, m *= 2) {
    Point y = base;
    Integer power = m;
    for (std::size_t i = 0; i < d; ++i, power *= m) {
      Rational step(direction[i], 1);
      step /= Rational(power);
      y[i] += step;
    }
    if (is_generic(p, cells, y)) return y;
  }
  throw Error(ErrorKind::ExhaustedRetries, "no generic point found near " + to_string(base));
}

HalfOpenSimplex pyramid(const Point& apex, const HalfOpenSimplex& base) {
  std::vector<Point> all = base.vertices;
  all.push_back(apex);
  if (affine_rank(all) != all.size()) {
    throw Error(ErrorKind::AffinelyDependent, "apex " + to_string(apex) + " lies in the span of the base");
  }
  HalfOpenSimplex out{std::move(all), base.missing, base.vertex_ids};
  out.missing.push_back(false);
  out.vertex_ids.push_back(-1);
  return out;
}

HalfOpenDecomposition half_open_decompose(const Polytope& p, const std::vector<std::vector<Point>>& simplices,
                                          const Point& apex, const Point& y) {
  const std::size_t d = p.dim();
  if (!contains(p, y, Containment::interior)) throw Error(ErrorKind::NotGeneric, "point is not interior");
  HalfOpenDecomposition out{BoundaryTriangulation{p, {}}, ConeTriangulation{p, apex, y, {}}};
  std::size_t closed = 0;
  for (const auto& s : simplices) {
    if (s.size() != d) throw Error(ErrorKind::InvariantViolated, "boundary simplex of wrong dimension");
    HalfOpenSimplex face{s, std::vector<bool>(d, false), {}};
    for (const auto& v : s) face.vertex_ids.push_back(find_vertex(p, v));
    HalfOpenSimplex cell = pyramid(apex, face);
    cell.missing = visibility_mask(cell.vertices, y);
    if (cell.missing.back()) throw Error(ErrorKind::InvariantViolated, "boundary facet visible from an interior point");
    face.missing.assign(cell.missing.begin(), cell.missing.end() - 1);
    if (face.is_closed()) ++closed;
    out.boundary.simplices.push_back(std::move(face));
    out.cone.cells.push_back(std::move(cell));
  }
  if (closed != 1) {
    throw Error(ErrorKind::InvariantViolated, std::to_string(closed) + " closed boundary simplices, expected 1");
  }
  return out;
}

InteriorPoint find_interior_point(const Polytope& p) {
  const auto& facets = p.facets();
  const std::size_t d = p.dim();
  const std::int64_t bound = p.denominator() * static_cast<std::int64_t>(d + 1);
  std::vector<std::vector<std::int64_t>> normals;
  std::vector<std::int64_t> offsets;
  for (const auto& h : facets) {
    std::vector<std::int64_t> n;
    for (const auto& c : h.normal) n.push_back(to_int64(c));
    normals.push_back(std::move(n));
    offsets.push_back(to_int64(h.offset));
  }
  for (std::int64_t ell = 1; ell <= bound; ++ell) {
    std::vector<std::int64_t> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
      Rational mn = p.vertices()[0][i], mx = mn;
      for (const auto& v : p.vertices()) {
        mn = std::min(mn, v[i]);
        mx = std::max(mx, v[i]);
      }
      lo[i] = to_int64(hstar::floor(mn * ell)) + 1;
      hi[i] = to_int64(hstar::ceil(mx * ell)) - 1;
      if (lo[i] > hi[i]) goto next_dilate;
    }
    {
      // Last coordinate varies fastest, so the first hit is lexicographically smallest.
      std::vector<std::int64_t> u(lo);
      while (true) {
        bool inside = true;
        for (std::size_t f = 0; f < normals.size() && inside; ++f) {
          __int128 s = 0;
          for (std::size_t i = 0; i < d; ++i) s += static_cast<__int128>(normals[f][i]) * u[i];
          inside = s < static_cast<__int128>(offsets[f]) * ell;
        }
        if (inside) {
          InteriorPoint out;
          out.ell = ell;
          for (auto c : u) {
            out.lattice_point.emplace_back(c);
            Rational x(c, ell);
            x.canonicalize();
            out.x.push_back(x);
          }
          return out;
        }
        std::size_t i = d;
        while (i > 0) {
          --i;
          if (u[i] < hi[i]) {
            ++u[i];
            break;
          }
          u[i] = lo[i];
          if (i == 0) goto next_dilate;
        }
      }
    }
  next_dilate:;
  }
  throw Error(ErrorKind::BoundExceeded, "no interior lattice point up to dilate " + std::to_string(bound));
}

HalfOpenDecomposition boundary_decomposition(const Polytope& p, const TriangulationOptions& options) {
  const Point apex = options.apex ? *options.apex : find_interior_point(p).x;
  if (!contains(p, apex, Containment::interior)) throw Error(ErrorKind::NotGeneric, "apex is not interior");
  std::vector<std::vector<Point>> simplices;
  std::vector<std::vector<Point>> cells;
  for (const auto& s : triangulate_boundary(p)) {
    simplices.push_back(gather(p, s));
    cells.push_back(simplices.back());
    cells.back().push_back(apex);
  }
  const Point y = pick_generic_point(p, cells, apex, options.seed);
  return half_open_decompose(p, simplices, apex, y);
}

ConeTriangulation vertex_cone_triangulation(const Polytope& p, std::uint64_t seed) {
  std::vector<std::vector<Point>> cells;
  const auto index_cells = pulling_triangulation(p);
  for (const auto& c : index_cells) cells.push_back(gather(p, c));
  const Point y = pick_generic_point(p, cells, centroid(p.vertices()), seed);
  ConeTriangulation out{p, p.vertices().front(), y, {}};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    HalfOpenSimplex s{cells[i], visibility_mask(cells[i], y), {}};
    for (auto id : index_cells[i]) s.vertex_ids.push_back(static_cast<std::int64_t>(id));
    out.cells.push_back(std::move(s));
  }
  return out;
}

bool is_unimodular(const BoundaryTriangulation& t) {
  if (!t.parent.is_lattice()) throw Error(ErrorKind::NotLatticePolytope, "unimodularity needs a lattice polytope");
  for (const auto& s : t.simplices) {
    const std::size_t d = s.vertices.front().size();
    IntegerMatrix gens(d + 1, s.vertices.size());
    for (std::size_t j = 0; j < s.vertices.size(); ++j) {
      const auto coords = integral_coordinates(s.vertices[j]);
      for (std::size_t i = 0; i < d; ++i) gens(i, j) = coords[i];
      gens(d, j) = 1;
    }
    if (lattice_index(gens) != 1) return false;
  }
  return true;
}

bool contains(const HalfOpenSimplex& s, const Point& x) {
  auto lambda = barycentric(s.vertices, x);
  if (!lambda) return false;
  for (std::size_t j = 0; j < lambda->size(); ++j) {
    const int sign = sgn((*lambda)[j]);
    if (sign < 0 || (sign == 0 && s.missing[j])) return false;
  }
  return true;
}

}  // namespace hstar
