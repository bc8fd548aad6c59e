#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hstar/geometry.hpp"
#include "hstar/polynomial.hpp"

namespace hstar {

struct SymmetricDecomposition {
  GradedPolynomial lhs;  // (1 + ... + z^(ell-1)) / (1 + ... + z^(q-1)) * h
  GradedPolynomial a;    // palindromic about q*d
  GradedPolynomial b;    // palindromic about q*d - ell, or zero
};

/// Unique split lhs = a + z^ell * b into palindromic parts. Indices are grid
/// indices of h, so q and ell are given in grid units.
/// Throws NotDivisible or NoSolution.
SymmetricDecomposition symmetric_decompose(const GradedPolynomial& h, std::int64_t q, std::int64_t ell,
                                           std::size_t d);

struct DecompositionOptions {
  std::int64_t period = 0;  // 0 means the denominator of P
  std::uint64_t seed = 0;
};

struct DecompositionReport {
  std::int64_t q = 1;  // period of the series denominators
  std::int64_t ell = 1;
  std::size_t d = 0;
  Point apex;  // interior point with denominator ell
  GradedPolynomial hstar;
  GradedPolynomial boundary;
  GradedPolynomial lhs;
  GradedPolynomial a;
  GradedPolynomial b;
  /// b summed over boundary simplices from pyramid parallelepiped points with
  /// a nonzero apex coefficient.
  GradedPolynomial b_pyramid;
  /// (boundary + z^ell b_pyramid) (1 - z^q) / (1 - z^ell).
  GradedPolynomial hstar_pyramid;
  bool a_equals_boundary = false;
  bool pyramid_agrees = false;
  std::int64_t s_degree = 0;

  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

/// Computes both routes and throws IdentityViolated if they disagree.
DecompositionReport decomposition_report(const Polytope& p, const DecompositionOptions& options = {});

struct PyramidComparison {
  GradedPolynomial base;     // numerator of Ehr_P over (1 - z^q)^(d)
  GradedPolynomial pyramid;  // numerator of Ehr_Pyr over (1 - z^q)^d (1 - z^r)
  bool leq = false;
};

/// P full-dimensional in R^(d-1), placed at height 0 in R^d; x must have a
/// nonzero last coordinate (ApexInSpan otherwise). r is the denominator of x.
PyramidComparison pyramid_hstar_compare(const Polytope& p, const Point& x);

struct AuditItem {
  std::string name;
  bool passed = true;
  bool warning_only = false;
  std::string detail;

  friend bool operator==(const AuditItem&, const AuditItem&) = default;
};

struct AuditReport {
  std::vector<AuditItem> items;

  /// Ignores warning-only items.
  bool all_passed() const;
  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

AuditReport inequality_audit(const Polytope& p, const DecompositionReport& report);
AuditReport inequality_audit(const Polytope& p);

}  // namespace hstar
