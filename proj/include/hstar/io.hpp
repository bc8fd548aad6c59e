#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hstar/decomposition.hpp"
#include "hstar/geometry.hpp"
#include "hstar/gorenstein.hpp"
#include "hstar/polynomial.hpp"
#include "hstar/rational_ehrhart.hpp"
#include "hstar/triangulation.hpp"

namespace hstar {

using Json = nlohmann::ordered_json;

/// Output of the hstar / boundary / interior subcommands.
struct PolynomialResult {
  std::string kind;  // "hstar", "boundary" or "interior"
  std::int64_t q = 1;
  std::size_t d = 0;
  GradedPolynomial value;

  friend bool operator==(const PolynomialResult&, const PolynomialResult&) = default;
};

struct PolytopeInfo {
  std::size_t dim = 0;
  std::size_t ambient_dim = 0;
  std::int64_t q = 1;
  std::size_t vertex_count = 0;
  std::vector<Halfspace> facets;  // empty when P is not full-dimensional
  std::int64_t ell = 0;           // 0 when not computed
  std::int64_t r = 0;
  std::string origin;

  friend bool operator==(const PolytopeInfo&, const PolytopeInfo&) = default;
};

/// One side-by-side comparison against the counting oracle.
struct OracleCheck {
  std::string name;
  GradedPolynomial computed;
  GradedPolynomial oracle;
  bool passed = false;

  friend bool operator==(const OracleCheck&, const OracleCheck&) = default;
};

struct VerifyReport {
  std::vector<OracleCheck> checks;
  bool all_passed() const;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

// Exact parsing: numbers may be JSON integers or "p/q" strings, never floats.
Polytope parse_polytope(const Json& j);
Polytope parse_polytope_json(std::string_view json_text);
/// Inline form "0,0; 1/2,1": points separated by ';', coordinates by ','.
Polytope parse_vertices(std::string_view text);
Polytope read_polytope_file(const std::string& path);

/// {"schema": 1, "polytope": ..., "result": ...}
Json envelope(const Polytope& p, Json result);

/// Cells as index lists into the parent's vertex array ("apex" for the cone
/// apex) plus missing-facet masks.
Json triangulation_json(const HalfOpenDecomposition& dec);

void to_json(Json& j, const Polytope& p);
void from_json(const Json& j, Polytope& p);
void to_json(Json& j, const Halfspace& h);
void from_json(const Json& j, Halfspace& h);
void to_json(Json& j, const GradedPolynomial& f);
void from_json(const Json& j, GradedPolynomial& f);
void to_json(Json& j, const PolynomialResult& r);
void from_json(const Json& j, PolynomialResult& r);
void to_json(Json& j, const PolytopeInfo& r);
void from_json(const Json& j, PolytopeInfo& r);
void to_json(Json& j, const OracleCheck& r);
void from_json(const Json& j, OracleCheck& r);
void to_json(Json& j, const VerifyReport& r);
void from_json(const Json& j, VerifyReport& r);
void to_json(Json& j, const DecompositionReport& r);
void from_json(const Json& j, DecompositionReport& r);
void to_json(Json& j, const AuditItem& r);
void from_json(const Json& j, AuditItem& r);
void to_json(Json& j, const AuditReport& r);
void from_json(const Json& j, AuditReport& r);
void to_json(Json& j, const GorensteinStatus& r);
void from_json(const Json& j, GorensteinStatus& r);
void to_json(Json& j, const IdentityCheck& r);
void from_json(const Json& j, IdentityCheck& r);
void to_json(Json& j, const GorensteinReport& r);
void from_json(const Json& j, GorensteinReport& r);
void to_json(Json& j, const RationalDecomposition& r);
void from_json(const Json& j, RationalDecomposition& r);
void to_json(Json& j, const RationalSeriesReport& r);
void from_json(const Json& j, RationalSeriesReport& r);

}  // namespace hstar
