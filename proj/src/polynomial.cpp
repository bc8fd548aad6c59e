#include "hstar/polynomial.hpp"

#include <ostream>

#include "hstar/error.hpp"

namespace hstar {

GradedPolynomial::GradedPolynomial(std::vector<Integer> coefficients, std::int64_t grid)
    : coeffs_(std::move(coefficients)), grid_(grid) {
  if (grid_ < 1) throw Error(ErrorKind::GridMismatch, "grid must be positive");
  trim();
}

GradedPolynomial::GradedPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

GradedPolynomial GradedPolynomial::monomial(std::int64_t index, Integer coefficient, std::int64_t grid) {
  std::vector<Integer> c(static_cast<std::size_t>(index) + 1, Integer(0));
  c.back() = std::move(coefficient);
  return GradedPolynomial(std::move(c), grid);
}

GradedPolynomial GradedPolynomial::geometric(std::int64_t n, std::int64_t grid) {
  return GradedPolynomial(std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)), grid);
}

GradedPolynomial GradedPolynomial::one_minus(std::int64_t e, std::int64_t grid) {
  return monomial(0, 1, grid) - monomial(e, 1, grid);
}

void GradedPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void GradedPolynomial::require_same_grid(const GradedPolynomial& other) const {
  if (grid_ != other.grid_) {
    throw Error(ErrorKind::GridMismatch,
                "grids " + std::to_string(grid_) + " and " + std::to_string(other.grid_) + " differ");
  }
}

Rational GradedPolynomial::degree() const {
  Rational d(degree_index(), grid_);
  d.canonicalize();
  return d;
}

Integer GradedPolynomial::coefficient(std::int64_t index) const {
  if (index < 0 || index >= static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(index)];
}

std::map<std::int64_t, Integer> GradedPolynomial::terms() const {
  std::map<std::int64_t, Integer> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace(static_cast<std::int64_t>(i), coeffs_[i]);
  }
  return out;
}

GradedPolynomial GradedPolynomial::regraded(std::int64_t grid) const { return GradedPolynomial(coeffs_, grid); }

GradedPolynomial GradedPolynomial::reversed(std::int64_t n) const {
  if (degree_index() > n) {
    throw Error(ErrorKind::InvariantViolated,
                "cannot reverse degree " + std::to_string(degree_index()) + " in degree " + std::to_string(n));
  }
  std::vector<Integer> out(static_cast<std::size_t>(n) + 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(n) - i] = coeffs_[i];
  return GradedPolynomial(std::move(out), grid_);
}

bool GradedPolynomial::is_palindromic() const { return is_zero() || is_palindromic_about(degree_index()); }

bool GradedPolynomial::is_palindromic_about(std::int64_t n) const {
  if (is_zero()) return true;
  if (degree_index() > n) return false;
  return reversed(n) == *this;
}

bool GradedPolynomial::is_nonnegative() const {
  for (const auto& c : coeffs_) {
    if (c < 0) return false;
  }
  return true;
}

Integer GradedPolynomial::value_at_one() const {
  Integer sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

GradedPolynomial GradedPolynomial::integer_exponent_part() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < coeffs_.size(); i += static_cast<std::size_t>(grid_)) out.push_back(coeffs_[i]);
  return GradedPolynomial(std::move(out), 1);
}

GradedPolynomial GradedPolynomial::shifted(std::int64_t index) const {
  if (is_zero()) return *this;
  std::vector<Integer> out(static_cast<std::size_t>(index), Integer(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return GradedPolynomial(std::move(out), grid_);
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) grid_ = other.grid_;
  require_same_grid(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) grid_ = other.grid_;
  require_same_grid(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return GradedPolynomial({}, a.is_zero() ? b.grid_ : a.grid_);
  a.require_same_grid(b);
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return GradedPolynomial(std::move(out), a.grid_);
}

GradedPolynomial operator*(GradedPolynomial a, const Integer& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

GradedPolynomial GradedPolynomial::divided_by(const GradedPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero polynomial");
  if (is_zero()) return GradedPolynomial({}, divisor.grid_);
  require_same_grid(divisor);
  const Integer& lead = divisor.coeffs_.back();
  std::vector<Integer> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() - 1 < dd) throw Error(ErrorKind::NotDivisible, to_string() + " / " + divisor.to_string());
  std::vector<Integer> quot(rem.size() - dd, Integer(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Integer& top = rem[i + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw Error(ErrorKind::NotDivisible, to_string() + " / " + divisor.to_string());
    }
    quot[i] = top / lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= quot[i] * divisor.coeffs_[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw Error(ErrorKind::NotDivisible, to_string() + " / " + divisor.to_string());
  }
  return GradedPolynomial(std::move(quot), grid_);
}

GradedPolynomial GradedPolynomial::pow(unsigned exponent) const {
  GradedPolynomial out = monomial(0, 1, grid_);
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

std::string GradedPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Integer magnitude = abs(c);
    if (i == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    Rational e(static_cast<long>(i), grid_);
    e.canonicalize();
    if (e == 1) {
      out += "z";
    } else if (e.get_den() == 1) {
      out += "z^" + e.get_num().get_str();
    } else {
      out += "z^(" + e.get_str() + ")";
    }
  }
  return out;
}

bool coefficientwise_leq(const GradedPolynomial& a, const GradedPolynomial& b) {
  const std::int64_t n = std::max(a.degree_index(), b.degree_index());
  for (std::int64_t i = 0; i <= n; ++i) {
    if (a.coefficient(i) > b.coefficient(i)) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const GradedPolynomial& p) { return os << p.to_string(); }

}  // namespace hstar
