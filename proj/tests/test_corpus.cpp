#include <gtest/gtest.h>

#include "corpus.hpp"
#include "properties.hpp"

using namespace hstar;
using namespace hstar::fixtures;

namespace {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = load_corpus();
  return c;
}

std::vector<std::size_t> indices() {
  std::vector<std::size_t> out(corpus().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::string joined(const Failures& f) {
  std::string s;
  for (const auto& x : f) s += "\n  " + x;
  return s;
}

class Corpus : public ::testing::TestWithParam<std::size_t> {
 protected:
  const CorpusEntry& entry() const { return corpus()[GetParam()]; }
};

}  // namespace

TEST(CorpusShape, SizeAndFamilies) {
  EXPECT_GE(corpus().size(), 40u);
  std::size_t lattice = 0, rational = 0, gorenstein = 0;
  for (const auto& e : corpus()) {
    lattice += e.has("lattice");
    rational += e.has("rational");
    gorenstein += e.has("gorenstein");
    EXPECT_EQ(e.has("lattice"), e.polytope.is_lattice()) << e.name;
    EXPECT_TRUE(e.polytope.is_full_dimensional()) << e.name;
    EXPECT_LE(e.polytope.denominator(), 3) << e.name;
    EXPECT_LE(e.polytope.dim(), 3u) << e.name;
  }
  EXPECT_GT(lattice, 0u);
  EXPECT_GT(rational, 0u);
  EXPECT_GT(gorenstein, 0u);
}

TEST_P(Corpus, MatchesOracle) {
  const auto f = oracle_failures(entry().polytope);
  EXPECT_TRUE(f.empty()) << entry().name << joined(f);
}

TEST_P(Corpus, Decomposition) {
  const auto f = decomposition_failures(entry().polytope);
  EXPECT_TRUE(f.empty()) << entry().name << joined(f);
}

TEST_P(Corpus, Invariants) {
  const auto f = invariant_failures(entry().polytope);
  EXPECT_TRUE(f.empty()) << entry().name << joined(f);
}

TEST_P(Corpus, Inequalities) {
  const auto f = inequality_failures(entry().polytope);
  EXPECT_TRUE(f.empty()) << entry().name << joined(f);
}

TEST_P(Corpus, GorensteinClassification) {
  const auto o = gorenstein_outcome(entry().polytope);
  EXPECT_TRUE(o.failures.empty()) << entry().name << joined(o.failures);
}

// Nested pairs: Q a subpolytope of P. h*_P >= h*_Q always holds for lattice
// polytopes; the boundary version can fail (the square/kite pair).
TEST(Nested, MonotonicityOfHstarButNotBoundary) {
  std::vector<std::pair<const CorpusEntry*, const CorpusEntry*>> pairs;
  for (const auto& a : corpus()) {
    for (const auto& b : corpus()) {
      if (&a == &b || !a.polytope.is_lattice() || !b.polytope.is_lattice()) continue;
      if (a.polytope.ambient_dim() != b.polytope.ambient_dim()) continue;
      bool inside = true;
      for (const auto& v : a.polytope.vertices()) inside = inside && contains(b.polytope, v, Containment::closed);
      if (inside) pairs.emplace_back(&a, &b);
    }
  }
  ASSERT_FALSE(pairs.empty());
  bool boundary_failure_seen = false;
  for (const auto& [small, big] : pairs) {
    EXPECT_TRUE(coefficientwise_leq(hstar_polytope(small->polytope), hstar_polytope(big->polytope)))
        << small->name << " in " << big->name;
    if (!coefficientwise_leq(hstar_boundary(small->polytope), hstar_boundary(big->polytope))) boundary_failure_seen = true;
  }
  EXPECT_TRUE(boundary_failure_seen);
}

INSTANTIATE_TEST_SUITE_P(All, Corpus, ::testing::ValuesIn(indices()),
                         [](const ::testing::TestParamInfo<std::size_t>& info) { return corpus()[info.param].name; });
