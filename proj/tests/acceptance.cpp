// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "builders.hpp"
#include "corpus.hpp"
#include "hstar/decomposition.hpp"
#include "hstar/ehrhart.hpp"
#include "hstar/rational_ehrhart.hpp"
#include "properties.hpp"

using namespace hstar;
using namespace hstar::fixtures;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.passed) {
    o.passed = false;
    o.detail = what;
  }
}

void absorb(Outcome& o, const std::string& name, const Failures& f) {
  if (!f.empty()) require(o, false, name + ": " + f.front());
}

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= limit_seconds) {
    require(o, false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3f s", seconds);
  std::cout << (o.passed ? "PASS " : "FAIL ") << number << " " << title << " (" << timing << ")";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << "\n";
  if (!o.passed) ++failures;
}

}  // namespace

int main() {
  const auto corpus = load_corpus();

  criterion(1, "boundary h* of the doubled square and the kite, monotonicity fails", 1.0, [] {
    Outcome o;
    const auto small = hstar_boundary(polytope("0,0; 0,2; 2,0; 2,2"));
    const auto big = hstar_boundary(polytope("0,0; 0,2; 2,0; 3,3"));
    require(o, small == GradedPolynomial({1, 6, 1}), "square gave " + small.to_string());
    require(o, big == GradedPolynomial({1, 4, 1}), "kite gave " + big.to_string());
    require(o, !coefficientwise_leq(small, big), "boundary h* of the square fits under the kite's");
    return o;
  });

  criterion(2, "h* of [-1/2,1/2] with q=2", 1.0, [] {
    Outcome o;
    const auto p = polytope("-1/2; 1/2");
    require(o, p.denominator() == 2, "denominator " + std::to_string(p.denominator()));
    const auto h = hstar_polytope(p);
    require(o, h == GradedPolynomial({1, 1, 1, 1}), "got " + h.to_string());
    return o;
  });

  criterion(3, "rational series of conv{(0,0),(0,2),(5,2)}", 1.0, [] {
    Outcome o;
    const auto p = polytope("0,0; 0,2; 5,2");
    require(o, codenominator(p) == 2, "codenominator " + std::to_string(codenominator(p)));
    const auto s = rational_series(p, false, 2);
    require(o, s.numerator == GradedPolynomial({1, 4, 7, 6, 2}, 2), "numerator " + s.numerator.to_string());
    const auto r = rational_decompose(p);
    require(o, r.decomposition.has_value(), "no decomposition");
    if (r.decomposition) {
      require(o, r.decomposition->ell == 2, "ell " + std::to_string(r.decomposition->ell));
      require(o, r.decomposition->a == GradedPolynomial({1, 4, 6, 4, 1}, 2), "a " + r.decomposition->a.to_string());
      require(o, r.decomposition->b == GradedPolynomial({1, 2, 1}, 2), "b " + r.decomposition->b.to_string());
    }
    return o;
  });

  criterion(4, "h*, boundary and interior match brute-force counts on the corpus", 300.0, [&] {
    Outcome o;
    require(o, corpus.size() >= 40, "corpus has " + std::to_string(corpus.size()) + " polytopes");
    for (const auto& e : corpus) absorb(o, e.name, oracle_failures(e.polytope));
    if (o.passed) o.detail = std::to_string(corpus.size()) + " polytopes";
    return o;
  });

  criterion(5, "symmetric decomposition: a = boundary h*, palindromic nonnegative parts, both b routes agree", 300.0, [&] {
    Outcome o;
    for (const auto& e : corpus) absorb(o, e.name, decomposition_failures(e.polytope));
    return o;
  });

  criterion(6, "boundary palindromicity, reciprocity, positivity, missing-face bounds, apex and seed invariance", 300.0, [&] {
    Outcome o;
    for (const auto& e : corpus) absorb(o, e.name, invariant_failures(e.polytope));
    return o;
  });

  criterion(7, "cumulative and leading-coefficient inequalities, tight on the standard triangle", 300.0, [&] {
    Outcome o;
    std::size_t lattice = 0;
    for (const auto& e : corpus) {
      if (!e.polytope.is_lattice()) continue;
      ++lattice;
      absorb(o, e.name, inequality_failures(e.polytope));
    }
    const auto k = ehrhart_polynomial(polytope("0,0; 1,0; 0,1"));
    const Rational lhs = Rational(3 * 2, 2) * k[2];
    require(o, lhs == Rational(3, 2) && k[1] == Rational(3, 2), "standard triangle gives " + to_string(lhs) + " vs " + to_string(k[1]));
    if (o.passed) o.detail = std::to_string(lattice) + " lattice polytopes, tight 3/2 = 3/2";
    return o;
  });

  criterion(8, "reflexive and Gorenstein identities, g shortcut equals exhaustive search", 300.0, [&] {
    Outcome o;
    std::size_t members = 0;
    std::vector<std::string> unconditional;
    for (const auto& e : corpus) {
      if (!e.has("gorenstein")) continue;
      ++members;
      const auto g = gorenstein_outcome(e.polytope);
      absorb(o, e.name, g.failures);
      if (!g.unconditional_identity_fails.empty()) unconditional.push_back(e.name);
    }
    // Attainable parts are checked above. The identity [g]h* = [q]h*_bd stated
    // for every rational g-Gorenstein polytope is false on the rational members
    // whose facets are not lattice hyperplanes, so the criterion as written
    // cannot pass; report it instead of narrowing the family.
    if (o.passed && !unconditional.empty()) {
      std::ostringstream s;
      s << "[g]h* = [q]h*_bd is false on " << unconditional.size() << " of " << members
        << " family members (first: " << unconditional.front()
        << "); every identity holds where its proof applies and the g search agrees on all " << members;
      require(o, false, s.str());
    }
    if (o.passed) o.detail = std::to_string(members) + " family members";
    return o;
  });

  return failures == 0 ? 0 : 1;
}
