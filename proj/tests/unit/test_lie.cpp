#include <doctest.h>

#include "jacobi/lie.hpp"

using namespace jacobi;
using G = GaussianRational;

namespace {

// Triples (M, X, kappa) with M in sl2, X an N x 2 matrix and kappa symmetric N x N,
// flattened as [M00 M01 M10 M11 | X row-major | kappa row-major].
struct Triple {
  unsigned N;
  std::vector<G> v;
  explicit Triple(unsigned n) : N(n), v(4 + 2 * n + n * n, G(0)) {}
  G& M(unsigned i, unsigned j) { return v[2 * i + j]; }
  G& X(unsigned r, unsigned j) { return v[4 + 2 * r + j]; }
  G& K(unsigned r, unsigned s) { return v[4 + 2 * N + N * r + s]; }
  G M(unsigned i, unsigned j) const { return v[2 * i + j]; }
  G X(unsigned r, unsigned j) const { return v[4 + 2 * r + j]; }
  G K(unsigned r, unsigned s) const { return v[4 + 2 * N + N * r + s]; }
};

Triple operator+(Triple a, const Triple& b) {
  for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
  return a;
}
Triple operator*(const G& s, Triple a) {
  for (auto& x : a.v) x *= s;
  return a;
}

Triple bracket(const Triple& a, const Triple& b) {
  const unsigned N = a.N;
  const G J[2][2] = {{G(0), G(-1)}, {G(1), G(0)}};
  Triple out(N);
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j)
      for (unsigned l = 0; l < 2; ++l) out.M(i, j) += a.M(i, l) * b.M(l, j) - b.M(i, l) * a.M(l, j);
  for (unsigned r = 0; r < N; ++r)
    for (unsigned j = 0; j < 2; ++j)
      for (unsigned l = 0; l < 2; ++l) out.X(r, j) += a.X(r, l) * b.M(l, j) - b.X(r, l) * a.M(l, j);
  for (unsigned r = 0; r < N; ++r)
    for (unsigned s = 0; s < N; ++s)
      for (unsigned p = 0; p < 2; ++p)
        for (unsigned q = 0; q < 2; ++q)
          out.K(r, s) += b.X(r, p) * J[p][q] * a.X(s, q) - a.X(r, p) * J[p][q] * b.X(s, q);
  return out;
}

Triple standard_triple(unsigned N, GenKind kind, unsigned r, unsigned s) {
  Triple t(N);
  switch (kind) {
    case GenKind::E: t.M(0, 1) = 1; break;
    case GenKind::F: t.M(1, 0) = 1; break;
    case GenKind::H: t.M(0, 0) = 1; t.M(1, 1) = -1; break;
    case GenKind::e: t.X(r - 1, 1) = 1; break;
    case GenKind::f: t.X(r - 1, 0) = 1; break;
    case GenKind::Z:
      t.K(r - 1, s - 1) += G(1, 2);
      t.K(s - 1, r - 1) += G(1, 2);
      break;
    default: FAIL("unexpected generator");
  }
  return t;
}

Triple triple_of(unsigned N, const GeneratorSymbol& g) {
  auto st = [&](GenKind k, unsigned r = 0, unsigned s = 0) { return standard_triple(N, k, r, s); };
  const G i = G::i(), half(1, 2);
  if (!g.tilde) return st(g.kind, g.r, g.s);
  switch (g.kind) {
    case GenKind::H: return i * (st(GenKind::F) + G(-1) * st(GenKind::E));
    case GenKind::E: return half * (st(GenKind::H) + i * (st(GenKind::F) + st(GenKind::E)));
    case GenKind::F: return half * (st(GenKind::H) + G(-1) * i * (st(GenKind::F) + st(GenKind::E)));
    case GenKind::Z: return (half * i) * st(GenKind::Z, g.r, g.s);
    case GenKind::e: return half * (st(GenKind::f, g.r) + i * st(GenKind::e, g.r));
    case GenKind::f: return half * (st(GenKind::f, g.r) + G(-1) * i * st(GenKind::e, g.r));
    default: FAIL("unexpected generator");
  }
  return Triple(N);
}

Triple triple_of(unsigned N, const LiePresentation& p, const LinComb& v) {
  Triple out(N);
  for (const auto& [idx, c] : v) out = out + c * triple_of(N, p.generator(idx));
  return out;
}

void check_against_matrix_model(unsigned N, BasisKind kind) {
  const auto p = make_jacobi(N, kind);
  CHECK(p->size() == 3 + 2 * N + N * (N + 1) / 2);
  for (std::size_t a = 0; a < p->size(); ++a)
    for (std::size_t b = 0; b < p->size(); ++b) {
      const Triple expect = bracket(triple_of(N, p->generator(a)), triple_of(N, p->generator(b)));
      const Triple got = triple_of(N, *p, p->bracket_gen(a, b));
      INFO(p->generator(a).name() << " " << p->generator(b).name());
      CHECK(expect.v == got.v);
    }
}

}  // namespace

TEST_CASE("lie: structure constants agree with the matrix model") {
  for (unsigned N = 1; N <= 3; ++N) {
    check_against_matrix_model(N, BasisKind::standard);
    check_against_matrix_model(N, BasisKind::tilde);
  }
}

TEST_CASE("lie: bracket table spot values") {
  const auto p = make_jacobi(2, BasisKind::standard);
  auto ix = [&](const char* n) { return *p->find_name(n); };
  CHECK(p->bracket_gen(ix("E"), ix("F")) == single(ix("H")));
  CHECK(p->bracket_gen(ix("H"), ix("E")) == single(ix("E"), G(2)));
  CHECK(p->bracket_gen(ix("H"), ix("f2")) == single(ix("f2"), G(-1)));
  CHECK(p->bracket_gen(ix("E"), ix("f1")) == single(ix("e1"), G(-1)));
  CHECK(p->bracket_gen(ix("F"), ix("e2")) == single(ix("f2"), G(-1)));
  CHECK(p->bracket_gen(ix("e1"), ix("f2")) == single(ix("Z12"), G(-2)));
  CHECK(p->bracket_gen(ix("e1"), ix("e2")).empty());
  CHECK(p->is_central(ix("Z22")));
  CHECK_FALSE(p->jacobi_violation().has_value());
}

TEST_CASE("lie: theta has order four and theta~ is an automorphism") {
  for (unsigned N = 1; N <= 3; ++N) {
    const LinearLieMap t = theta(N);
    CHECK(t.is_automorphism());
    CHECK_FALSE(t.after(t).is_identity());
    CHECK(t.after(t).after(t).after(t).is_identity());
    CHECK(theta_tilde(N).is_automorphism());
    CHECK(tau(N).is_automorphism());
    const auto std_p = make_jacobi(N, BasisKind::standard), til = make_jacobi(N, BasisKind::tilde);
    CHECK(basis_change(til, std_p).after(basis_change(std_p, til)).is_identity());
  }
}

TEST_CASE("lie: theta on generators") {
  const auto p = make_jacobi(1, BasisKind::standard);
  auto ix = [&](const char* n) { return *p->find_name(n); };
  const LinearLieMap t = theta(1);
  CHECK(t.image(ix("H")) == single(ix("H"), G(-1)));
  CHECK(t.image(ix("E")) == single(ix("F"), G(-1)));
  CHECK(t.image(ix("F")) == single(ix("E"), G(-1)));
  CHECK(t.image(ix("e1")) == single(ix("f1")));
  CHECK(t.image(ix("f1")) == single(ix("e1"), G(-1)));
  CHECK(t.image(ix("Z11")) == single(ix("Z11")));
}

TEST_CASE("lie: inconsistent tables are rejected") {
  using B = LiePresentation::Bracket;
  std::vector<GeneratorSymbol> g{GeneratorSymbol::make(GenKind::x), GeneratorSymbol::make(GenKind::y),
                                 GeneratorSymbol::make(GenKind::h)};
  // [x,y] = h, [h,x] = x, [h,y] = x fails the Jacobi identity
  CHECK_THROWS(LiePresentation("bad", g, {B{0, 1, single(2)}, B{2, 0, single(0)}, B{2, 1, single(0)}}));
  CHECK_THROWS_AS(mu_sl2(G(0)), DomainError);
}

TEST_CASE("lie: mu_M composes contravariantly") {
  const Matrix A{{G(1), G(2)}, {G(0), G(1)}}, B{{G(0), G(1)}, {G(-1), G(3)}};
  Matrix BA(2, std::vector<G>(2, G(0)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) BA[i][j] += B[i][l] * A[l][j];
  CHECK(mu_matrix(A).is_automorphism());
  CHECK(mu_matrix(A).after(mu_matrix(B)) == mu_matrix(BA));
  CHECK_THROWS_AS(mu_matrix({{G(1), G(2)}, {G(2), G(4)}}), DomainError);
}
