#include "hstar/arith.hpp"

#include <cctype>

#include "hstar/error.hpp"

namespace hstar {
namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

bool is_integer_token(std::string_view token) {
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) token.remove_prefix(1);
  if (token.empty()) return false;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view token, std::string_view whole) {
  if (!is_integer_token(token)) {
    throw Error(ErrorKind::ParseError, "not an exact rational: '" + std::string(whole) + "'");
  }
  if (token.front() == '+') token.remove_prefix(1);
  return Integer(std::string(token), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view token = trim(text);
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(token, text));
  const Integer num = parse_integer(trim(token.substr(0, slash)), text);
  const std::string_view den_text = trim(token.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorKind::ParseError, "denominator must be unsigned: '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Point& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ",";
    out += point[i].get_str();
  }
  return out + ")";
}

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::int64_t to_int64(const Integer& value) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!mpz_fits_slong_p(value.get_mpz_t())) {
    throw Error(ErrorKind::Overflow, "integer " + value.get_str() + " does not fit in 64 bits");
  }
  return mpz_get_si(value.get_mpz_t());
}

Integer denominator_of(const Point& point) {
  Integer out = 1;
  for (const auto& c : point) out = lcm(out, c.get_den());
  return out;
}

Integer denominator_of(std::span<const Point> points) {
  Integer out = 1;
  for (const auto& p : points) out = lcm(out, denominator_of(p));
  return out;
}

Rational dot(std::span<const Integer> normal, std::span<const Rational> point) {
  Rational sum = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) sum += Rational(normal[i]) * point[i];
  return sum;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Point scale(const Point& point, const Rational& factor) {
  Point out(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) out[i] = point[i] * factor;
  return out;
}

Point add(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Point subtract(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::vector<Integer> integral_coordinates(const Point& point) {
  std::vector<Integer> out;
  out.reserve(point.size());
  for (const auto& c : point) {
    if (c.get_den() != 1) {
      throw Error(ErrorKind::NotLatticePolytope, "point " + to_string(point) + " is not integral");
    }
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace hstar
