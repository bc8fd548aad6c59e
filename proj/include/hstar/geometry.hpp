#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "hstar/arith.hpp"

namespace hstar {

/// normal . x <= offset, with gcd(normal entries, offset) == 1.
struct Halfspace {
  std::vector<Integer> normal;
  Integer offset;

  /// normal . x - offset; negative strictly inside, zero on the hyperplane.
  Rational slack(const Point& x) const;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

/// Scales a rational (normal, offset) pair to coprime integers.
Halfspace normalize_halfspace(const std::vector<Rational>& normal, const Rational& offset);

enum class Containment { closed, interior, boundary };

/// Rational polytope given by its irredundant vertices.
///
/// Immutable after construction. Facets and vertex/facet incidences are
/// computed once when the polytope is built, so sharing across threads needs
/// no synchronization.
class Polytope {
 public:
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  bool is_full_dimensional() const noexcept { return dim_ == ambient_dim_; }
  /// Least q with q * P a lattice polytope.
  std::int64_t denominator() const noexcept { return denominator_; }
  bool is_lattice() const noexcept { return denominator_ == 1; }

  /// Facets sorted lexicographically by (normal, offset). Throws NotFullDimensional.
  const std::vector<Halfspace>& facets() const;
  /// facet_vertices()[i] lists the indices of the vertices on facet i.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const;

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices_ == b.vertices_; }

 private:
  friend Polytope build_polytope(std::vector<Point> points);

  std::vector<Point> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  std::size_t dim_ = 0;
  std::size_t ambient_dim_ = 0;
  std::int64_t denominator_ = 1;
};

/// Convex hull of the given points; redundant points are dropped and the
/// vertices are stored in lexicographic order.
Polytope build_polytope(std::vector<Point> points);

const std::vector<Halfspace>& facet_description(const Polytope& p);

bool contains(const Polytope& p, const Point& x, Containment mode);

Polytope dilate(const Polytope& p, const Rational& t);
Polytope translate(const Polytope& p, const Point& shift);

/// Polar dual {y : x . y <= 1 for all x in P}; the origin must be interior.
Polytope dual(const Polytope& p);

/// Re-expresses a lower-dimensional polytope in unimodular coordinates of its
/// affine hull, preserving |nP ∩ Z^d| for every n. Throws when the affine
/// hull meets the lattice only at dilates n divisible by some g > 1.
Polytope project_to_affine_hull(const Polytope& p);

/// Maximum number of affinely independent points among the given ones.
std::size_t affine_rank(std::span<const Point> points);

Point centroid(std::span<const Point> points);

/// Hyperplane through `points` (which must span a hyperplane of their
/// ambient space), oriented so that `inside` satisfies it strictly.
Halfspace hyperplane_through(std::span<const Point> points, const Point& inside);

}  // namespace hstar
