#include <doctest.h>

#include <random>

#include "jacobi/pbw.hpp"

using namespace jacobi;
using G = GaussianRational;

namespace {

using Word = std::vector<std::size_t>;
using WordSum = std::map<Word, G>;

// Straightens words by swapping adjacent out-of-order letters, using only the
// bracket table. Slow but independent of the memoized engine.
WordSum straighten(const LiePresentation& p, WordSum in) {
  WordSum done;
  while (!in.empty()) {
    auto it = in.begin();
    Word w = it->first;
    const G c = it->second;
    in.erase(it);
    if (c.is_zero()) continue;
    std::size_t pos = w.size();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        pos = i;
        break;
      }
    if (pos == w.size()) {
      done[w] += c;
      continue;
    }
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    in[swapped] += c;
    for (const auto& [g, b] : p.bracket_gen(w[pos], w[pos + 1])) {
      Word shorter(w.begin(), w.begin() + static_cast<long>(pos));
      shorter.push_back(g);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
      in[shorter] += c * b;
    }
  }
  return done;
}

UeaElement to_element(const AlgebraPtr& alg, const WordSum& s) {
  UeaElement out(alg);
  for (const auto& [w, c] : s) {
    if (c.is_zero()) continue;
    Monomial m(alg->size(), 0);
    for (auto g : w) ++m[g];
    out += UeaElement(alg, {{m, ParamScalar(c)}});
  }
  return out;
}

std::size_t ix(const AlgebraPtr& a, const char* name) { return *a->presentation()->find_name(name); }

}  // namespace

TEST_CASE("pbw: normal form agrees with naive rewriting on random words") {
  std::mt19937 rng(11);
  for (unsigned N = 1; N <= 2; ++N)
    for (BasisKind kind : {BasisKind::standard, BasisKind::tilde}) {
      const AlgebraPtr alg = uea_jacobi(N, kind);
      std::uniform_int_distribution<std::size_t> letter(0, alg->size() - 1);
      std::uniform_int_distribution<int> len(0, 6);
      for (int t = 0; t < 60; ++t) {
        Word w(static_cast<std::size_t>(len(rng)));
        for (auto& g : w) g = letter(rng);
        const UeaElement expect = to_element(alg, straighten(*alg->presentation(), {{w, G(1)}}));
        CHECK(UeaElement::word(alg, w) == expect);
      }
    }
}

TEST_CASE("pbw: products of words are associative") {
  std::mt19937 rng(5);
  const AlgebraPtr alg = uea_jacobi(2, BasisKind::standard);
  std::uniform_int_distribution<std::size_t> letter(0, alg->size() - 1);
  auto rnd = [&] {
    Word w(3);
    for (auto& g : w) g = letter(rng);
    return UeaElement::word(alg, w);
  };
  for (int t = 0; t < 20; ++t) {
    const UeaElement a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("pbw: small identities") {
  const AlgebraPtr alg = uea_jacobi(1, BasisKind::standard);
  auto g = [&](const char* n) { return UeaElement::generator(alg, n); };
  CHECK(g("E") * g("F") == g("F") * g("E") + g("H"));
  CHECK(commutator(g("e1"), g("f1")) == ParamScalar(-2) * g("Z11"));
  CHECK(ad(ix(alg, "H"), g("e1")) == g("e1"));
  CHECK(g("E").pow(3).degree() == 3);
  CHECK(g("E").str() == "E");
  CHECK((g("E") * g("F")).str() == "H + F*E");
  const UeaElement om = casimir_sl2(alg);
  for (const char* n : {"E", "F", "H"}) CHECK(commutator(om, g(n)).is_zero());
  CHECK_FALSE(commutator(om, g("e1")).is_zero());
}

TEST_CASE("pbw: nu at rank one") {
  const AlgebraPtr loc = uea_localized_rank1(BasisKind::standard);
  const UeaElement nE = nu_rank1(loc, GenKind::E), nF = nu_rank1(loc, GenKind::F), nH = nu_rank1(loc, GenKind::H);
  CHECK(commutator(nE, nF) == nH);
  CHECK(commutator(nH, nE) == ParamScalar(2) * nE);
  CHECK(commutator(nH, nF) == ParamScalar(-2) * nF);
  for (const char* n : {"e1", "f1", "Z11"}) {
    const UeaElement x = UeaElement::generator(loc, n);
    CHECK(commutator(nE, x).is_zero());
    CHECK(commutator(nF, x).is_zero());
    CHECK(commutator(nH, x).is_zero());
  }
  const UeaElement om = omega_rank1(loc);
  CHECK(om.constant_term().is_zero());
  const std::size_t W = *loc->presentation()->find_name("W");
  CHECK_FALSE(om.involves(W));
  for (std::size_t g = 0; g < loc->size(); ++g) CHECK(ad(g, om).is_zero());
}
