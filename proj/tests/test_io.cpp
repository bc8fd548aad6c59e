#include <gtest/gtest.h>

#include "builders.hpp"
#include "hstar/cli.hpp"
#include "hstar/ehrhart.hpp"
#include "hstar/error.hpp"
#include "hstar/io.hpp"

using namespace hstar;
using hstar::fixtures::polytope;

namespace {

template <class T>
T round_trip(const T& value) {
  const std::string text = Json(value).dump();
  return Json::parse(text).get<T>();
}

ErrorKind kind_of_failure(const std::string& text) {
  try {
    parse_polytope_json(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Overflow;  // sentinel: no error
}

}  // namespace

TEST(Parse, StringsAndIntegers) {
  auto p = parse_polytope_json(R"({"vertices": [["0","0"], ["1/2", 1], [0, "1"]]})");
  EXPECT_EQ(p, polytope("0,0; 1/2,1; 0,1"));
  EXPECT_EQ(parse_vertices(" 0 , 0 ;1/2,1; 0,1 ;"), p);
}

TEST(Parse, Rejections) {
  EXPECT_EQ(kind_of_failure(R"({"vertices": [[0.5, 0], [1, 1], [0, 1]]})"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of_failure(R"({"vertices": [["1e3", 0], [1, 1], [0, 1]]})"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of_failure(R"({"points": []})"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of_failure(R"({"vertices": []})"), ErrorKind::EmptyInput);
  EXPECT_EQ(kind_of_failure(R"({"vertices": [[0, 0], [1]]})"), ErrorKind::MixedDimensions);
  EXPECT_EQ(kind_of_failure("{"), ErrorKind::ParseError);
  EXPECT_THROW(parse_vertices("0,0; 0.5,1"), Error);
}

TEST(Polynomial, JsonForm) {
  GradedPolynomial f({1, 4, 7, 6, 2}, 2);
  EXPECT_EQ(Json(f).dump(), R"({"grid":"2","coeffs":{"0":"1","1":"4","2":"7","3":"6","4":"2"}})");
  EXPECT_EQ(Json(GradedPolynomial{1, 0, -3}).dump(), R"({"grid":"1","coeffs":{"0":"1","2":"-3"}})");
  EXPECT_EQ(round_trip(f), f);
  EXPECT_EQ(round_trip(GradedPolynomial({}, 3)), GradedPolynomial({}, 3));
  Integer big("123456789012345678901234567890");
  GradedPolynomial g = GradedPolynomial::monomial(5, big);
  EXPECT_EQ(round_trip(g), g);
}

TEST(Envelope, SchemaAndStrings) {
  auto p = polytope("0,0; 1/2,0; 0,1");
  Json j = envelope(p, Json(PolynomialResult{"hstar", 2, 2, GradedPolynomial{1, 1}}));
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("polytope").at("vertices").at(1).at(0), "0");
  EXPECT_EQ(j.at("result").at("q"), "2");
  EXPECT_EQ(j.at("polytope").get<Polytope>(), p);
}

TEST(RoundTrip, Reports) {
  auto p = polytope("0,0; 0,2; 5,2");
  auto dr = decomposition_report(p);
  EXPECT_EQ(round_trip(dr), dr);
  auto audit = inequality_audit(p, dr);
  EXPECT_EQ(round_trip(audit), audit);

  for (const char* text : {"0,0; 1,0; 0,1", "-1,-1; 1,-1; -1,1; 1,1", "0,0; 3/2,0; 0,3/2", "0,0; 3,0; 0,1"}) {
    auto gr = verify_gorenstein_identities(polytope(text));
    EXPECT_EQ(round_trip(gr), gr) << text;
  }

  auto rs = rational_decompose(p);
  ASSERT_TRUE(rs.decomposition);
  EXPECT_EQ(round_trip(rs), rs);
  auto plain = rational_series(polytope("1,1; 2,1; 1,2"), true);
  EXPECT_EQ(round_trip(plain), plain);

  auto info = describe(p);
  EXPECT_EQ(round_trip(info), info);
  auto vr = verify_against_oracle(p);
  EXPECT_EQ(round_trip(vr), vr);
  PolynomialResult pr{"interior", 1, 2, hstar_interior(p)};
  EXPECT_EQ(round_trip(pr), pr);
}

TEST(Triangulation, DumpShape) {
  auto p = polytope("0,0; 1,0; 0,1; 1,1");
  auto dec = boundary_decomposition(p);
  Json j = triangulation_json(dec);
  ASSERT_EQ(j.at("boundary").size(), 4u);
  std::size_t closed = 0;
  for (const auto& cell : j.at("boundary")) {
    ASSERT_EQ(cell.at("vertices").size(), 2u);
    bool any = false;
    for (const auto& m : cell.at("missing")) any = any || m.get<bool>();
    if (!any) ++closed;
    for (const auto& id : cell.at("vertices")) EXPECT_LT(std::stoi(id.get<std::string>()), 4);
  }
  EXPECT_EQ(closed, 1u);
  for (const auto& cell : j.at("cells")) {
    std::size_t apexes = 0;
    for (const auto& id : cell.at("vertices")) apexes += id == "apex";
    EXPECT_EQ(apexes, 1u);
  }
  EXPECT_EQ(j.at("apex"), Json::parse(R"(["1/2","1/2"])"));
}
