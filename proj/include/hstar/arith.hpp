#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hstar {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of Q^d. The owning context fixes the length.
using Point = std::vector<Rational>;

// Parses "p/q", "p" or "-p/q". Whitespace around the token is ignored.
// Anything that is not an exact rational (floats, exponents) is rejected.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);
std::string to_string(const Point& point);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

std::int64_t to_int64(const Integer& value);

/// Least common multiple of the coordinate denominators.
Integer denominator_of(const Point& point);
Integer denominator_of(std::span<const Point> points);

Rational dot(std::span<const Integer> normal, std::span<const Rational> point);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

Point scale(const Point& point, const Rational& factor);
Point add(const Point& a, const Point& b);
Point subtract(const Point& a, const Point& b);

std::vector<Integer> integral_coordinates(const Point& point);

}  // namespace hstar
