#pragma once

#include <cstdint>
#include <vector>

#include "hstar/matrix.hpp"

namespace hstar {

/// Unimodular diagonalization rows * A * columns = diagonal.
///
/// The diagonal entries are not normalized into a divisibility chain; every
/// consumer here only needs some diagonal form together with the transforms.
struct Diagonalization {
  IntegerMatrix diagonal;     // same shape as A, nonzero only at (i, i) for i < rank
  IntegerMatrix column;       // unimodular, cols(A) x cols(A)
  IntegerMatrix row_inverse;  // inverse of the unimodular row transform, rows(A) x rows(A)
  std::size_t rank = 0;
};

Diagonalization diagonalize(IntegerMatrix a);

/// Basis (as columns) of the saturated lattice span(A) ∩ Z^rows.
IntegerMatrix saturation_basis(const IntegerMatrix& a);

/// Index of the lattice generated by the columns of A inside its saturation.
/// Requires linearly independent columns.
Integer lattice_index(const IntegerMatrix& a);

/// Lattice points of the half-open parallelepiped spanned by the columns of
/// a generator matrix. Generator j contributes a coefficient in (0, 1] when
/// open[j] is set and in [0, 1) otherwise.
struct ParallelepipedPoints {
  std::int64_t denominator = 1;                       // common denominator of all coefficients
  std::vector<std::vector<std::int64_t>> numerators;  // per point, per generator
  std::vector<std::int64_t> last_coordinate;          // per point, the final coordinate of the lattice point

  std::size_t size() const noexcept { return last_coordinate.size(); }
};

ParallelepipedPoints parallelepiped_points(const IntegerMatrix& generators, const std::vector<bool>& open);

}  // namespace hstar
