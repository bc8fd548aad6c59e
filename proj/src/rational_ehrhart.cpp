#include "hstar/rational_ehrhart.hpp"

#include "hstar/decomposition.hpp"
#include "hstar/ehrhart.hpp"
#include "hstar/error.hpp"

namespace hstar {

std::int64_t codenominator(const Polytope& p) {
  Integer r = 0;
  for (const auto& h : p.facets()) {
    if (h.offset != 0) r = r == 0 ? Integer(abs(h.offset)) : lcm(r, h.offset);
  }
  return to_int64(r);
}

std::string to_string(OriginPosition position) {
  switch (position) {
    case OriginPosition::interior: return "interior";
    case OriginPosition::boundary: return "boundary";
    case OriginPosition::outside: return "outside";
  }
  return "outside";
}

OriginPosition origin_position(const Polytope& p) {
  const Point origin(p.ambient_dim(), Rational(0));
  if (contains(p, origin, Containment::interior)) return OriginPosition::interior;
  if (contains(p, origin, Containment::closed)) return OriginPosition::boundary;
  return OriginPosition::outside;
}

RationalSeriesReport rational_series(const Polytope& p, bool refined, std::int64_t m) {
  RationalSeriesReport out;
  out.r = codenominator(p);
  out.refined = refined;
  out.grid = refined ? 2 * out.r : out.r;
  out.origin = origin_position(p);
  const Polytope scaled = dilate(p, Rational(1, static_cast<unsigned long>(out.grid)));
  if (m == 0) m = scaled.denominator();
  if (m < 0 || m % scaled.denominator() != 0) {
    throw Error(ErrorKind::InvalidM, "m = " + std::to_string(m) + " does not make (m/" + std::to_string(out.grid) +
                                         ")P a lattice polytope");
  }
  out.m = m;
  out.numerator = hstar_polytope(scaled, {m, 0, {}}).regraded(out.grid);
  return out;
}

RationalSeriesReport rational_decompose(const Polytope& p, std::int64_t m) {
  const bool refined = origin_position(p) == OriginPosition::outside;
  RationalSeriesReport out = rational_series(p, refined, m);
  const Polytope scaled = dilate(p, Rational(1, static_cast<unsigned long>(out.grid)));
  const DecompositionReport rep = decomposition_report(scaled, {out.m, 0});
  RationalDecomposition dec;
  dec.ell = rep.ell;
  dec.lhs = rep.lhs.regraded(out.grid);
  dec.a = rep.a.regraded(out.grid);
  dec.b = rep.b.regraded(out.grid);
  dec.boundary = rep.boundary.regraded(out.grid);
  if (out.origin == OriginPosition::interior && !out.numerator.is_palindromic()) {
    throw Error(ErrorKind::IdentityViolated, "numerator " + out.numerator.to_string() + " is not palindromic");
  }
  out.decomposition = std::move(dec);
  return out;
}

}  // namespace hstar
