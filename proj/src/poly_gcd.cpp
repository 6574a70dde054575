// Multivariate gcd over Q(i) by recursive primitive remainder sequences.

#include <utility>

#include "jacobi/coeffs.hpp"

namespace jacobi {

namespace {

ParamPoly content_in(const ParamPoly& a, Param p) {
  ParamPoly g;
  for (const auto& c : a.coefficients_in(p)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return ParamPoly(1);
  }
  return g;
}

ParamPoly primitive_part(const ParamPoly& a, Param p) {
  if (a.is_zero()) return a;
  return a.exact_div(content_in(a, p));
}

}  // namespace

ParamPoly pseudo_remainder(const ParamPoly& a, const ParamPoly& b, Param p) {
  if (b.is_zero()) throw DivisionByZero();
  unsigned db = b.degree_in(p);
  ParamPoly lb = b.coefficients_in(p).back();
  ParamPoly r = a;
  while (!r.is_zero() && r.uses(p) && r.degree_in(p) >= db) {
    unsigned dr = r.degree_in(p);
    ParamPoly lr = r.coefficients_in(p).back();
    ParamExponents shift{};
    shift[static_cast<std::size_t>(p)] = static_cast<std::uint16_t>(dr - db);
    r = lb * r - lr * ParamPoly::monomial(shift, 1) * b;
  }
  if (db == 0 && !r.is_zero()) {
    // b is free of p: a single scaling kills every term.
    r = ParamPoly();
  }
  return r;
}

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);

  Param v = Param::k;
  for (std::size_t j = 0; j < kParamCount; ++j) {
    auto p = static_cast<Param>(j);
    if (a.uses(p) || b.uses(p)) {
      v = p;
      break;
    }
  }
  if (!b.uses(v)) return gcd(content_in(a, v), b);
  if (!a.uses(v)) return gcd(a, content_in(b, v));

  ParamPoly ca = content_in(a, v);
  ParamPoly cb = content_in(b, v);
  ParamPoly g = gcd(ca, cb);
  ParamPoly pa = a.exact_div(ca);
  ParamPoly pb = b.exact_div(cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  for (;;) {
    ParamPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (!r.uses(v)) {
      pb = ParamPoly(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, v);
  }
  return (g * primitive_part(pb, v)).monic();
}

}  // namespace jacobi
