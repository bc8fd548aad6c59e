#include <gtest/gtest.h>

#include "builders.hpp"
#include "hstar/decomposition.hpp"
#include "hstar/ehrhart.hpp"
#include "hstar/error.hpp"
#include "hstar/oracle.hpp"

using namespace hstar;
using hstar::fixtures::polytope;
using hstar::fixtures::pt;

namespace {

const AuditItem* find_item(const AuditReport& r, const std::string& name) {
  for (const auto& item : r.items)
    if (item.name == name) return &item;
  return nullptr;
}

}  // namespace

TEST(SymmetricDecompose, Examples) {
  auto tri = symmetric_decompose(GradedPolynomial{1}, 1, 3, 2);
  EXPECT_EQ(tri.a, (GradedPolynomial{1, 1, 1}));
  EXPECT_TRUE(tri.b.is_zero());

  auto seg = symmetric_decompose(GradedPolynomial{1, 1, 1, 1}, 2, 1, 1);
  EXPECT_EQ(seg.lhs, (GradedPolynomial{1, 0, 1}));
  EXPECT_EQ(seg.a, (GradedPolynomial{1, 0, 1}));
  EXPECT_TRUE(seg.b.is_zero());

  // Unit square: ell = 2, lhs = (1 + z)^2.
  auto sq = symmetric_decompose(GradedPolynomial{1, 1}, 1, 2, 2);
  EXPECT_EQ(sq.a, (GradedPolynomial{1, 2, 1}));
  EXPECT_TRUE(sq.b.is_zero());

  EXPECT_THROW(symmetric_decompose(GradedPolynomial{1, 2}, 2, 1, 1), Error);
}

TEST(SymmetricDecompose, NegativePartsAreReported) {
  // 1 + z with q = ell = 1, d = 2 splits as (1 + 2z + z^2) + z(-1 - z).
  auto s = symmetric_decompose(GradedPolynomial{1, 1}, 1, 1, 2);
  EXPECT_EQ(s.a, (GradedPolynomial{1, 2, 1}));
  EXPECT_EQ(s.b, (GradedPolynomial{-1, -1}));
  EXPECT_FALSE(s.b.is_nonnegative());
}

TEST(SymmetricDecompose, DegreeTooLargeHasNoSolution) {
  try {
    symmetric_decompose(GradedPolynomial{1, 1, 1, 1}, 1, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSolution);
  }
}

TEST(Report, StandardSimplex) {
  auto r = decomposition_report(polytope("0,0; 1,0; 0,1"));
  EXPECT_EQ(r.ell, 3);
  EXPECT_EQ(r.a, (GradedPolynomial{1, 1, 1}));
  EXPECT_TRUE(r.b.is_zero());
  EXPECT_TRUE(r.a_equals_boundary);
  EXPECT_TRUE(r.pyramid_agrees);
}

TEST(Report, CenteredSquare) {
  auto r = decomposition_report(polytope("-1,-1; 1,-1; -1,1; 1,1"));
  EXPECT_EQ(r.ell, 1);
  EXPECT_EQ(r.q, 1);
  EXPECT_EQ(r.a, (GradedPolynomial{1, 6, 1}));
  EXPECT_TRUE(r.b.is_zero());
}

TEST(Report, RationalTriangle) {
  // Scaled triangle from the rational series example: q = 2, ell = 2.
  auto p = polytope("0,0; 0,1; 5/2,1");
  auto r = decomposition_report(p);
  EXPECT_EQ(r.q, 2);
  EXPECT_EQ(r.ell, 2);
  EXPECT_EQ(r.hstar, (GradedPolynomial{1, 4, 7, 6, 2}));
  EXPECT_EQ(r.a, (GradedPolynomial{1, 4, 6, 4, 1}));
  EXPECT_EQ(r.b, (GradedPolynomial{1, 2, 1}));
  EXPECT_EQ(r.b_pyramid, r.b);
  EXPECT_EQ(r.a, oracle::hstar_from_counts(p, Containment::boundary));
}

TEST(Report, PeriodOverride) {
  auto p = polytope("0,0; 1,0; 0,1; 1,1");
  auto r = decomposition_report(p, {2, 0});
  EXPECT_EQ(r.q, 2);
  EXPECT_EQ(r.hstar, hstar_polytope(p, {2, 0, {}}));
  EXPECT_TRUE(r.a.is_palindromic_about(4));
}

TEST(PyramidCompare, Examples) {
  auto unit = pyramid_hstar_compare(polytope("0; 1"), pt("0,1"));
  EXPECT_EQ(unit.base, GradedPolynomial{1});
  EXPECT_EQ(unit.pyramid, GradedPolynomial{1});

  auto seg = pyramid_hstar_compare(polytope("-1/2; 1/2"), pt("0,1"));
  EXPECT_EQ(seg.base, (GradedPolynomial{1, 1, 1, 1}));
  EXPECT_EQ(seg.pyramid, seg.base);

  auto half = pyramid_hstar_compare(polytope("0; 1"), pt("0,1/2"));
  EXPECT_TRUE(half.leq);
  // conv{(0,0),(1,0),(0,1/2)}: numerator over (1 - z)^2 (1 - z^2), checked by counting.
  auto counts = oracle::count_sequence(polytope("0,0; 1,0; 0,1/2"), 8, Containment::closed);
  auto numerator = GradedPolynomial(counts) * GradedPolynomial::one_minus(1).pow(2) * GradedPolynomial::one_minus(2);
  std::vector<Integer> head(numerator.coefficients().begin(), numerator.coefficients().begin() + 4);
  EXPECT_EQ(GradedPolynomial(head), half.pyramid);

  EXPECT_THROW(pyramid_hstar_compare(polytope("0; 1"), pt("1,0")), Error);
}

TEST(Audit, StandardSimplexTight) {
  auto p = polytope("0,0; 1,0; 0,1");
  auto audit = inequality_audit(p);
  EXPECT_TRUE(audit.all_passed());
  const auto* item = find_item(audit, "leading_coefficients");
  ASSERT_NE(item, nullptr);
  EXPECT_TRUE(item->passed);
  EXPECT_EQ(item->detail, "ell*d/2*k_d = 3/2, k_(d-1) = 3/2");
}

TEST(Audit, CenteredSquareBoundaryBelow) {
  auto audit = inequality_audit(polytope("-1,-1; 1,-1; -1,1; 1,1"));
  const auto* item = find_item(audit, "boundary_below_polytope");
  ASSERT_NE(item, nullptr);
  EXPECT_TRUE(item->passed);
  EXPECT_TRUE(audit.all_passed());
}
