#include "hstar/io.hpp"

#include <fstream>
#include <sstream>

#include "hstar/error.hpp"

namespace hstar {
namespace {

// Numbers travel as strings so no consumer ever sees a float.
Json str(const Integer& v) { return to_string(v); }
Json str(const Rational& v) { return to_string(v); }
Json str(std::int64_t v) { return std::to_string(v); }

Rational rational_of(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_number_float()) throw Error(ErrorKind::ParseError, "float " + j.dump() + " is not exact; write it as \"p/q\"");
  throw Error(ErrorKind::ParseError, "expected a number, got " + j.dump());
}

Integer integer_of(const Json& j) {
  const Rational v = rational_of(j);
  if (v.get_den() != 1) throw Error(ErrorKind::ParseError, "expected an integer, got " + to_string(v));
  return v.get_num();
}

std::int64_t int64_of(const Json& j) { return to_int64(integer_of(j)); }

Json point_json(const Point& x) {
  Json out = Json::array();
  for (const auto& c : x) out.push_back(str(c));
  return out;
}

Point point_of(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected a coordinate array, got " + j.dump());
  Point x;
  for (const auto& c : j) x.push_back(rational_of(c));
  return x;
}

Json integers_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(str(c));
  return out;
}

std::vector<Integer> integers_of(const Json& j) {
  std::vector<Integer> v;
  for (const auto& c : j) v.push_back(integer_of(c));
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

GorensteinKind kind_of(const std::string& s) {
  for (auto k : {GorensteinKind::reflexive, GorensteinKind::rational_reflexive, GorensteinKind::gorenstein,
                 GorensteinKind::rational_gorenstein, GorensteinKind::none}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorKind::ParseError, "unknown kind " + s);
}

OriginPosition origin_of(const std::string& s) {
  for (auto o : {OriginPosition::interior, OriginPosition::boundary, OriginPosition::outside}) {
    if (to_string(o) == s) return o;
  }
  throw Error(ErrorKind::ParseError, "unknown origin position " + s);
}

Json cells_json(const std::vector<HalfOpenSimplex>& cells) {
  Json out = Json::array();
  for (const auto& s : cells) {
    Json ids = Json::array();
    for (auto id : s.vertex_ids) ids.push_back(id < 0 ? Json("apex") : str(id));
    Json mask = Json::array();
    for (bool m : s.missing) mask.push_back(m);
    out.push_back({{"vertices", ids}, {"missing", mask}});
  }
  return out;
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

Polytope parse_polytope(const Json& j) {
  const Json& vs = field(j, "vertices");
  if (!vs.is_array() || vs.empty()) throw Error(ErrorKind::EmptyInput, "\"vertices\" must be a nonempty array");
  std::vector<Point> points;
  for (const auto& v : vs) points.push_back(point_of(v));
  return build_polytope(std::move(points));
}

Polytope parse_polytope_json(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return parse_polytope(j);
}

Polytope parse_vertices(std::string_view text) {
  std::vector<Point> points;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view item = text.substr(start, end - start);
    if (item.find_first_not_of(" \t\n") != std::string_view::npos) {
      Point x;
      std::size_t s = 0;
      while (s <= item.size()) {
        const std::size_t e = std::min(item.find(',', s), item.size());
        x.push_back(parse_rational(item.substr(s, e - s)));
        s = e + 1;
      }
      points.push_back(std::move(x));
    }
    start = end + 1;
  }
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "no vertices given");
  return build_polytope(std::move(points));
}

Polytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_polytope_json(buffer.str());
}

Json envelope(const Polytope& p, Json result) {
  return Json{{"schema", 1}, {"polytope", Json(p)}, {"result", std::move(result)}};
}

Json triangulation_json(const HalfOpenDecomposition& dec) {
  return Json{{"apex", point_json(dec.cone.apex)},
              {"generic_point", point_json(dec.cone.generic_point)},
              {"boundary", cells_json(dec.boundary.simplices)},
              {"cells", cells_json(dec.cone.cells)}};
}

void to_json(Json& j, const Polytope& p) {
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(point_json(v));
  j = Json{{"vertices", vs}};
}
void from_json(const Json& j, Polytope& p) { p = parse_polytope(j); }

void to_json(Json& j, const Halfspace& h) { j = Json{{"normal", integers_json(h.normal)}, {"offset", str(h.offset)}}; }
void from_json(const Json& j, Halfspace& h) {
  h.normal = integers_of(field(j, "normal"));
  h.offset = integer_of(field(j, "offset"));
}

void to_json(Json& j, const GradedPolynomial& f) {
  Json coeffs = Json::object();
  for (const auto& [k, c] : f.terms()) coeffs[std::to_string(k)] = str(c);
  j = Json{{"grid", str(f.grid())}, {"coeffs", coeffs}};
}
void from_json(const Json& j, GradedPolynomial& f) {
  const std::int64_t grid = int64_of(field(j, "grid"));
  std::vector<Integer> c;
  for (const auto& [k, v] : field(j, "coeffs").items()) {
    const std::int64_t index = to_int64(parse_rational(k).get_num());
    if (index < 0) throw Error(ErrorKind::ParseError, "negative exponent index " + k);
    if (c.size() <= static_cast<std::size_t>(index)) c.resize(static_cast<std::size_t>(index) + 1);
    c[static_cast<std::size_t>(index)] = integer_of(v);
  }
  f = GradedPolynomial(std::move(c), grid);
}

void to_json(Json& j, const PolynomialResult& r) {
  j = Json{{"kind", r.kind}, {"q", str(r.q)}, {"d", str(static_cast<std::int64_t>(r.d))}, {"polynomial", r.value},
           {"text", r.value.to_string()}};
}
void from_json(const Json& j, PolynomialResult& r) {
  r.kind = field(j, "kind").get<std::string>();
  r.q = int64_of(field(j, "q"));
  r.d = static_cast<std::size_t>(int64_of(field(j, "d")));
  r.value = field(j, "polynomial").get<GradedPolynomial>();
}

void to_json(Json& j, const PolytopeInfo& r) {
  j = Json{{"dim", str(static_cast<std::int64_t>(r.dim))},
           {"ambient_dim", str(static_cast<std::int64_t>(r.ambient_dim))},
           {"q", str(r.q)},
           {"vertex_count", str(static_cast<std::int64_t>(r.vertex_count))},
           {"facets", r.facets},
           {"ell", str(r.ell)},
           {"r", str(r.r)},
           {"origin", r.origin}};
}
void from_json(const Json& j, PolytopeInfo& r) {
  r.dim = static_cast<std::size_t>(int64_of(field(j, "dim")));
  r.ambient_dim = static_cast<std::size_t>(int64_of(field(j, "ambient_dim")));
  r.q = int64_of(field(j, "q"));
  r.vertex_count = static_cast<std::size_t>(int64_of(field(j, "vertex_count")));
  r.facets = field(j, "facets").get<std::vector<Halfspace>>();
  r.ell = int64_of(field(j, "ell"));
  r.r = int64_of(field(j, "r"));
  r.origin = field(j, "origin").get<std::string>();
}

void to_json(Json& j, const OracleCheck& r) {
  j = Json{{"name", r.name}, {"computed", r.computed}, {"oracle", r.oracle}, {"passed", r.passed}};
}
void from_json(const Json& j, OracleCheck& r) {
  r.name = field(j, "name").get<std::string>();
  r.computed = field(j, "computed").get<GradedPolynomial>();
  r.oracle = field(j, "oracle").get<GradedPolynomial>();
  r.passed = field(j, "passed").get<bool>();
}

void to_json(Json& j, const VerifyReport& r) { j = Json{{"checks", r.checks}, {"all_passed", r.all_passed()}}; }
void from_json(const Json& j, VerifyReport& r) { r.checks = field(j, "checks").get<std::vector<OracleCheck>>(); }

void to_json(Json& j, const DecompositionReport& r) {
  j = Json{{"q", str(r.q)},
           {"ell", str(r.ell)},
           {"d", str(static_cast<std::int64_t>(r.d))},
           {"apex", point_json(r.apex)},
           {"hstar", r.hstar},
           {"boundary", r.boundary},
           {"lhs", r.lhs},
           {"a", r.a},
           {"b", r.b},
           {"b_pyramid", r.b_pyramid},
           {"hstar_pyramid", r.hstar_pyramid},
           {"a_equals_boundary", r.a_equals_boundary},
           {"pyramid_agrees", r.pyramid_agrees},
           {"s_degree", str(r.s_degree)}};
}
void from_json(const Json& j, DecompositionReport& r) {
  r.q = int64_of(field(j, "q"));
  r.ell = int64_of(field(j, "ell"));
  r.d = static_cast<std::size_t>(int64_of(field(j, "d")));
  r.apex = point_of(field(j, "apex"));
  r.hstar = field(j, "hstar").get<GradedPolynomial>();
  r.boundary = field(j, "boundary").get<GradedPolynomial>();
  r.lhs = field(j, "lhs").get<GradedPolynomial>();
  r.a = field(j, "a").get<GradedPolynomial>();
  r.b = field(j, "b").get<GradedPolynomial>();
  r.b_pyramid = field(j, "b_pyramid").get<GradedPolynomial>();
  r.hstar_pyramid = field(j, "hstar_pyramid").get<GradedPolynomial>();
  r.a_equals_boundary = field(j, "a_equals_boundary").get<bool>();
  r.pyramid_agrees = field(j, "pyramid_agrees").get<bool>();
  r.s_degree = int64_of(field(j, "s_degree"));
}

void to_json(Json& j, const AuditItem& r) {
  j = Json{{"name", r.name}, {"passed", r.passed}, {"warning_only", r.warning_only}, {"detail", r.detail}};
}
void from_json(const Json& j, AuditItem& r) {
  r.name = field(j, "name").get<std::string>();
  r.passed = field(j, "passed").get<bool>();
  r.warning_only = field(j, "warning_only").get<bool>();
  r.detail = field(j, "detail").get<std::string>();
}

void to_json(Json& j, const AuditReport& r) { j = Json{{"items", r.items}, {"all_passed", r.all_passed()}}; }
void from_json(const Json& j, AuditReport& r) { r.items = field(j, "items").get<std::vector<AuditItem>>(); }

void to_json(Json& j, const GorensteinStatus& r) {
  j = Json{{"kind", to_string(r.kind)},
           {"g", r.g ? str(*r.g) : Json(nullptr)},
           {"rational_reflexive", r.rational_reflexive},
           {"translate", r.translate ? integers_json(*r.translate) : Json(nullptr)}};
}
void from_json(const Json& j, GorensteinStatus& r) {
  r.kind = kind_of(field(j, "kind").get<std::string>());
  const Json& g = field(j, "g");
  r.g = g.is_null() ? std::nullopt : std::optional<std::int64_t>(int64_of(g));
  r.rational_reflexive = field(j, "rational_reflexive").get<bool>();
  const Json& t = field(j, "translate");
  r.translate = t.is_null() ? std::nullopt : std::optional<std::vector<Integer>>(integers_of(t));
}

void to_json(Json& j, const IdentityCheck& r) {
  j = Json{{"name", r.name}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"passed", r.passed}};
}
void from_json(const Json& j, IdentityCheck& r) {
  r.name = field(j, "name").get<std::string>();
  r.lhs = field(j, "lhs").get<GradedPolynomial>();
  r.rhs = field(j, "rhs").get<GradedPolynomial>();
  r.passed = field(j, "passed").get<bool>();
}

void to_json(Json& j, const GorensteinReport& r) {
  j = Json{{"status", r.status},
           {"hstar", r.hstar},
           {"boundary", r.boundary},
           {"checks", r.checks},
           {"skipped", r.skipped}};
}
void from_json(const Json& j, GorensteinReport& r) {
  r.status = field(j, "status").get<GorensteinStatus>();
  r.hstar = field(j, "hstar").get<GradedPolynomial>();
  r.boundary = field(j, "boundary").get<GradedPolynomial>();
  r.checks = field(j, "checks").get<std::vector<IdentityCheck>>();
  r.skipped = field(j, "skipped").get<std::vector<std::string>>();
}

void to_json(Json& j, const RationalDecomposition& r) {
  j = Json{{"ell", str(r.ell)}, {"lhs", r.lhs}, {"a", r.a}, {"b", r.b}, {"boundary", r.boundary}};
}
void from_json(const Json& j, RationalDecomposition& r) {
  r.ell = int64_of(field(j, "ell"));
  r.lhs = field(j, "lhs").get<GradedPolynomial>();
  r.a = field(j, "a").get<GradedPolynomial>();
  r.b = field(j, "b").get<GradedPolynomial>();
  r.boundary = field(j, "boundary").get<GradedPolynomial>();
}

void to_json(Json& j, const RationalSeriesReport& r) {
  j = Json{{"r", str(r.r)},
           {"m", str(r.m)},
           {"refined", r.refined},
           {"grid", str(r.grid)},
           {"origin", to_string(r.origin)},
           {"numerator", r.numerator},
           {"decomposition", r.decomposition ? Json(*r.decomposition) : Json(nullptr)}};
}
void from_json(const Json& j, RationalSeriesReport& r) {
  r.r = int64_of(field(j, "r"));
  r.m = int64_of(field(j, "m"));
  r.refined = field(j, "refined").get<bool>();
  r.grid = int64_of(field(j, "grid"));
  r.origin = origin_of(field(j, "origin").get<std::string>());
  r.numerator = field(j, "numerator").get<GradedPolynomial>();
  const Json& d = field(j, "decomposition");
  r.decomposition = d.is_null() ? std::nullopt : std::optional<RationalDecomposition>(d.get<RationalDecomposition>());
}

}  // namespace hstar
