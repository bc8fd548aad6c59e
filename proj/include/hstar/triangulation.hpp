#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hstar/geometry.hpp"

namespace hstar {

/// Simplex with some facets removed. Facet j is the one opposite vertices[j].
struct HalfOpenSimplex {
  std::vector<Point> vertices;
  std::vector<bool> missing;
  /// Index of each vertex in the parent polytope's vertex list, -1 otherwise
  /// (an interior apex, or a non-vertex boundary point).
  std::vector<std::int64_t> vertex_ids;

  std::size_t dim() const noexcept { return vertices.size() - 1; }
  std::size_t missing_count() const;
  bool is_closed() const { return missing_count() == 0; }
};

/// Half-open triangulation of the boundary: exactly one closed simplex.
struct BoundaryTriangulation {
  Polytope parent;
  std::vector<HalfOpenSimplex> simplices;
};

/// Half-open triangulation of P by cells sharing an apex.
struct ConeTriangulation {
  Polytope parent;
  Point apex;
  Point generic_point;
  std::vector<HalfOpenSimplex> cells;
};

struct HalfOpenDecomposition {
  BoundaryTriangulation boundary;
  ConeTriangulation cone;
};

using IndexSimplex = std::vector<std::size_t>;

/// Pulling triangulation of every facet (lexicographically smallest vertex
/// pulled first, recursively). Vertex indices refer to p.vertices().
std::vector<IndexSimplex> triangulate_boundary(const Polytope& p);

/// Pulling triangulation of P itself: a cone from its smallest vertex.
std::vector<IndexSimplex> pulling_triangulation(const Polytope& p);

/// Barycentric coordinates of y with respect to an affinely independent point
/// list, or nullopt when y is off its affine hull.
std::optional<std::vector<Rational>> barycentric(const std::vector<Point>& simplex, const Point& y);

/// Facet j of a full-dimensional simplex is missing iff y and vertex j lie
/// strictly on opposite sides of it. Throws NotGeneric if y is on a facet hyperplane.
std::vector<bool> visibility_mask(const std::vector<Point>& simplex, const Point& y);

/// True when y is interior to P and off every facet hyperplane of every cell.
bool is_generic(const Polytope& p, const std::vector<std::vector<Point>>& cells, const Point& y);

/// Deterministic perturbation of `base` that is generic for the given cells.
/// Seed 0 uses the all-ones direction; other seeds draw small nonzero integers.
Point pick_generic_point(const Polytope& p, const std::vector<std::vector<Point>>& cells, const Point& base,
                         std::uint64_t seed = 0);

HalfOpenSimplex pyramid(const Point& apex, const HalfOpenSimplex& base);

/// Cones the closed boundary simplices over `apex` and removes the facets visible from y.
HalfOpenDecomposition half_open_decompose(const Polytope& p, const std::vector<std::vector<Point>>& simplices,
                                          const Point& apex, const Point& y);

struct InteriorPoint {
  std::int64_t ell = 0;      // least l with an interior lattice point in lP
  Point lattice_point;       // lexicographically smallest such point
  Point x;                   // lattice_point / ell
};

InteriorPoint find_interior_point(const Polytope& p);

struct TriangulationOptions {
  std::optional<Point> apex;  // defaults to find_interior_point(p).x
  std::uint64_t seed = 0;
};

/// Boundary pulling triangulation made half-open by the visibility construction.
HalfOpenDecomposition boundary_decomposition(const Polytope& p, const TriangulationOptions& options = {});

/// Pulling triangulation of P made half-open; the apex is the smallest vertex.
ConeTriangulation vertex_cone_triangulation(const Polytope& p, std::uint64_t seed = 0);

/// True when every boundary simplex has normalized volume 1.
bool is_unimodular(const BoundaryTriangulation& t);

/// Membership of x in the half-open simplex.
bool contains(const HalfOpenSimplex& s, const Point& x);

}  // namespace hstar
