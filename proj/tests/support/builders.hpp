#pragma once

#include <string>
#include <vector>

#include "hstar/arith.hpp"
#include "hstar/geometry.hpp"

namespace hstar::fixtures {

// "0,0; 1/2,1; 3,0" -> points
inline std::vector<Point> points(const std::string& text) {
  std::vector<Point> out;
  Point current;
  std::string token;
  auto flush_token = [&] {
    if (token.find_first_not_of(" \t") != std::string::npos) current.push_back(parse_rational(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush_token();
    } else if (ch == ';') {
      flush_token();
      out.push_back(std::move(current));
      current.clear();
    } else {
      token.push_back(ch);
    }
  }
  flush_token();
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

inline Polytope polytope(const std::string& text) { return build_polytope(points(text)); }

inline Point pt(const std::string& text) { return points(text).front(); }

}  // namespace hstar::fixtures
