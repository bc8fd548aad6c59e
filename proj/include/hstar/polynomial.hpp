#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hstar/arith.hpp"

namespace hstar {

/// Integer polynomial whose exponents live on the grid (1/grid) * Z>=0.
///
/// Coefficients are indexed by the grid index k, standing for z^(k/grid).
/// Classical h*-polynomials use grid 1. The dense coefficient vector never
/// carries trailing zeros, so structural equality is value equality.
class GradedPolynomial {
 public:
  GradedPolynomial() = default;
  explicit GradedPolynomial(std::vector<Integer> coefficients, std::int64_t grid = 1);
  GradedPolynomial(std::initializer_list<long> coefficients);

  static GradedPolynomial monomial(std::int64_t index, Integer coefficient = 1, std::int64_t grid = 1);
  /// 1 + z + ... + z^(n-1), in grid-index units.
  static GradedPolynomial geometric(std::int64_t n, std::int64_t grid = 1);
  /// 1 - z^(e/grid).
  static GradedPolynomial one_minus(std::int64_t e, std::int64_t grid = 1);

  std::int64_t grid() const noexcept { return grid_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Highest grid index with a nonzero coefficient, -1 for the zero polynomial.
  std::int64_t degree_index() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  Rational degree() const;
  Integer coefficient(std::int64_t index) const;
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  std::map<std::int64_t, Integer> terms() const;

  GradedPolynomial regraded(std::int64_t grid) const;
  /// z^(n/grid) * f(1/z); requires degree_index() <= n.
  GradedPolynomial reversed(std::int64_t n) const;
  bool is_palindromic() const;
  bool is_palindromic_about(std::int64_t n) const;
  bool is_nonnegative() const;
  Integer value_at_one() const;
  /// Terms with integer exponent, returned on grid 1.
  GradedPolynomial integer_exponent_part() const;
  GradedPolynomial shifted(std::int64_t index) const;

  GradedPolynomial& operator+=(const GradedPolynomial& other);
  GradedPolynomial& operator-=(const GradedPolynomial& other);
  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
  friend GradedPolynomial operator*(GradedPolynomial a, const Integer& c);
  friend bool operator==(const GradedPolynomial&, const GradedPolynomial&) = default;

  /// Exact quotient; throws NotDivisible when a remainder is left.
  GradedPolynomial divided_by(const GradedPolynomial& divisor) const;
  GradedPolynomial pow(unsigned exponent) const;

  /// Deterministic text form, e.g. "1 + 4*z^(1/2) + 7*z".
  std::string to_string() const;

 private:
  void trim();
  void require_same_grid(const GradedPolynomial& other) const;

  std::vector<Integer> coeffs_;
  std::int64_t grid_ = 1;
};

/// Coefficient-wise a <= b.
bool coefficientwise_leq(const GradedPolynomial& a, const GradedPolynomial& b);

std::ostream& operator<<(std::ostream& os, const GradedPolynomial& p);

}  // namespace hstar
