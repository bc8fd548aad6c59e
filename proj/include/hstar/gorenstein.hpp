#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hstar/geometry.hpp"
#include "hstar/polynomial.hpp"

namespace hstar {

enum class GorensteinKind { reflexive, rational_reflexive, gorenstein, rational_gorenstein, none };

std::string to_string(GorensteinKind kind);

struct GorensteinStatus {
  GorensteinKind kind = GorensteinKind::none;
  std::optional<std::int64_t> g;             // least g with gP an integral translate of a reflexive polytope
  bool rational_reflexive = false;           // origin interior and A x <= 1 with A integral
  std::optional<std::vector<Integer>> translate;  // t with gP + t reflexive

  friend bool operator==(const GorensteinStatus&, const GorensteinStatus&) = default;
};

/// Integral t with P + t reflexive, if any. Throws NotLatticePolytope.
std::optional<std::vector<Integer>> reflexive_translate(const Polytope& p);
bool is_reflexive(const Polytope& p);

/// Every facet reads a.x <= 1 with a integral. Throws OriginNotInterior.
bool is_rational_reflexive(const Polytope& p);

/// Every facet is a.x <= b with a primitive and b integral, i.e. P is cut
/// out by lattice hyperplanes. Always true for lattice polytopes.
bool has_lattice_facet_hyperplanes(const Polytope& p);

/// Tests only g = q * ell(qP); see gorenstein_search for the exhaustive variant.
GorensteinStatus gorenstein_index(const Polytope& p);

/// Tries every g = 1..q(d+1) and returns the least g with gP a reflexive translate.
std::optional<std::int64_t> gorenstein_search(const Polytope& p);

struct IdentityCheck {
  std::string name;
  GradedPolynomial lhs;
  GradedPolynomial rhs;
  bool passed = false;

  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

struct GorensteinReport {
  GorensteinStatus status;
  GradedPolynomial hstar;
  GradedPolynomial boundary;
  std::vector<IdentityCheck> checks;
  // Identities whose hypotheses fail for P, with the reason.
  std::vector<std::string> skipped;

  friend bool operator==(const GorensteinReport&, const GorensteinReport&) = default;
};

/// Checks every identity that applies to P's class; throws IdentityViolated on failure.
/// For non-lattice g-Gorenstein P the [g]h*_P = [q]h*_bd identity and
/// palindromicity are only claimed when P is cut out by lattice hyperplanes;
/// (3/2)conv{0, e1, e2} is a 2-Gorenstein counterexample otherwise.
GorensteinReport verify_gorenstein_identities(const Polytope& p);

}  // namespace hstar
