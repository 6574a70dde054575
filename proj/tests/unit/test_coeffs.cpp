#include <doctest.h>

#include <random>

#include "jacobi/coeffs.hpp"
#include "jacobi/linalg.hpp"

using namespace jacobi;
using G = GaussianRational;

namespace {

ParamScalar var(Param p) { return ParamScalar::param(p); }

G gi(long re_num, long re_den, long im_num, long im_den) {
  return G(mpq_class(re_num, re_den), mpq_class(im_num, im_den));
}

}  // namespace

TEST_CASE("gaussian rationals: field operations") {
  const G i = G::i();
  CHECK(i * i == G(-1));
  CHECK(G(1, 2) + G(1, 3) == G(5, 6));
  CHECK(G(4, 6) == G(2, 3));
  const G z = gi(3, 2, -5, 7);
  CHECK(z * z.inv() == G(1));
  CHECK(z * z.conj() == G(z.norm()));
  CHECK((z / z) == G(1));
  CHECK_THROWS_AS(G(0).inv(), DivisionByZero);
}

TEST_CASE("gaussian rationals: parsing and rendering") {
  CHECK(G::parse_rational("-3/6") == G(-1, 2));
  CHECK(G::parse_rational(" 7 ") == G(7));
  CHECK_THROWS_AS(G::parse_rational("1/"), DomainError);
  CHECK_THROWS_AS(G::parse_rational("x"), DomainError);
  CHECK(G(-1, 2).str() == "-1/2");
  CHECK(G::i().str() == "i");
  CHECK(G(3).as_integer() == 3);
  CHECK_FALSE(G(3, 2).as_integer().has_value());
}

TEST_CASE("gaussian rationals: random field axioms") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-9, 9), pos(1, 5);
  auto rnd = [&] { return gi(d(rng), pos(rng), d(rng), pos(rng)); };
  for (int t = 0; t < 200; ++t) {
    G a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("polynomials: arithmetic and canonical gcd") {
  const ParamPoly k = ParamPoly::variable(Param::k), c = ParamPoly::variable(Param::c);
  const ParamPoly a = (k + ParamPoly(1)) * (k - ParamPoly(2)) * c;
  const ParamPoly b = (k + ParamPoly(1)) * (c + ParamPoly(3));
  CHECK(gcd(a, b) == k + ParamPoly(1));
  CHECK(a.exact_div(k + ParamPoly(1)) == (k - ParamPoly(2)) * c);
  CHECK_THROWS_AS(a.exact_div(c + ParamPoly(1)), ConsistencyError);
  CHECK(a.degree_in(Param::k) == 2);
  CHECK(a.evaluate({{Param::k, G(2)}, {Param::c, G(5)}}).is_zero());
  CHECK(k.pow(3).substitute(Param::k, c + ParamPoly(1)) == (c + ParamPoly(1)).pow(3));
}

TEST_CASE("fraction field: normal form is unique") {
  const ParamScalar k = var(Param::k);
  const ParamScalar x = (k * k - ParamScalar(1)) / (k - ParamScalar(1));
  CHECK(x == k + ParamScalar(1));
  CHECK(x.is_polynomial());
  const ParamScalar y = ParamScalar(1) / (k * ParamScalar(2) + ParamScalar(4));
  CHECK(y * (k + ParamScalar(2)) == ParamScalar::rational(1, 2));
  CHECK_THROWS_AS(y.evaluate({{Param::k, G(-2)}}), PoleError);
  CHECK_THROWS_AS(y.evaluate({}), DomainError);
  CHECK(y.evaluate({{Param::k, G(0)}}) == G(1, 4));
}

TEST_CASE("fraction field: substitution commutes with evaluation") {
  const ParamScalar k = var(Param::k), mu = var(Param::mu);
  const ParamScalar f = (mu * mu + k) / (mu - k + ParamScalar(3));
  const ParamScalar g = f.substitute(Param::mu, k * ParamScalar(2));
  for (long v : {1L, 2L, 5L, -7L}) {
    const G kv(v);
    CHECK(g.evaluate({{Param::k, kv}}) == f.evaluate({{Param::k, kv}, {Param::mu, kv * G(2)}}));
  }
}

TEST_CASE("linear algebra: nullspace, resultant and rational roots") {
  const ParamScalar k = var(Param::k);
  ScalarMatrix A{{ParamScalar(1), k, ParamScalar(0)}, {k, k * k, ParamScalar(0)}};
  CHECK(rank(A, 3) == 1);
  const auto ns = nullspace(A, 3);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK((A[0][0] * v[0] + A[0][1] * v[1] + A[0][2] * v[2]).is_zero());

  const ParamPoly x = ParamPoly::variable(Param::mu);
  const ParamPoly p = (x - ParamPoly(G(1, 2))) * (x + ParamPoly(3)) * (x * x + ParamPoly(1));
  const auto roots = rational_roots(p, Param::mu);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == mpq_class(-3));
  CHECK(roots[1] == mpq_class(1, 2));
  // res(x - a, x - b) = a - b up to sign
  const ParamPoly r = resultant(x - ParamPoly(2), x - ParamPoly(5), Param::mu);
  CHECK((r == ParamPoly(3) || r == ParamPoly(-3)));
}
