#pragma once

#include <cstdint>
#include <vector>

#include "hstar/geometry.hpp"
#include "hstar/polynomial.hpp"

namespace hstar::oracle {

/// Brute-force lattice point counts, independent of the triangulation code.

/// |nP ∩ Z^d| restricted to the closure, interior or boundary, by scanning the
/// integer bounding box of nP. Throws BoxTooLarge past 10^8 candidates.
Integer count_points(const Polytope& p, std::int64_t n, Containment mode);

/// Counts for n = 0..max_n; entry 0 is 1 for closed/boundary and 0 for interior.
std::vector<Integer> count_sequence(const Polytope& p, std::int64_t max_n, Containment mode);

/// Numerator obtained by multiplying the truncated counting series by
/// (1 - z^q)^(d+1), or ^d for the boundary. Throws TailNonzero if the
/// surplus coefficients do not vanish.
GradedPolynomial hstar_from_counts(const Polytope& p, Containment mode);

}  // namespace hstar::oracle
