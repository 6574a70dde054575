#include <doctest.h>

#include <set>
#include <tuple>

#include "jacobi/characters.hpp"

using namespace jacobi;
using G = GaussianRational;

namespace {

using Values = std::tuple<std::string, std::string, std::string, std::string>;  // P, Q, E, C

Values values_of(const Character& chi) {
  return {chi.value("P11").str(), chi.value("Q11").str(), chi.value("E11").str(), chi.value("C").str()};
}

// Characters kill P and Q (they have nonzero E-weight), so the two product
// relations reduce to scalar equations in e = chi(E) and c = chi(C):
//   (e + 1/2)(e + 3/2)(c - (e + k)(e + k + 2)) = 0
//   (e - 1/2)(e - 3/2)(c - (e + k)(e + k - 2)) = 0
std::set<Values> solve_scalar_system(const G& k) {
  std::set<Values> out;
  auto put = [&](const G& e, const G& c) { out.insert({"0", "0", e.str(), c.str()}); };
  for (const G e : {G(-1, 2), G(-3, 2)}) put(e, (e + k) * (e + k - G(2)));
  for (const G e : {G(1, 2), G(3, 2)}) put(e, (e + k) * (e + k + G(2)));
  put(-k, G(0));
  return out;
}

}  // namespace

TEST_CASE("characters: rank one counts and values against the scalar system") {
  const std::vector<std::pair<G, std::size_t>> cases{{G(0), 5},     {G(1), 5},     {G(1, 4), 5},  {G(7, 3), 5},
                                                     {G(1, 2), 4},  {G(-1, 2), 4}, {G(3, 2), 4},  {G(-3, 2), 4},
                                                     {G(-5, 6), 5}, {G(9, 2), 5}};
  for (const auto& [k, count] : cases) {
    INFO("k = " << k.str());
    const IdoConfig cfg = IdoConfig::at(1, k);
    const CharacterSet set = enumerate_characters(cfg);
    CHECK(set.report.passed());
    CHECK(set.characters.size() == count);
    std::set<Values> got;
    for (const auto& chi : set.characters) {
      got.insert(values_of(chi));
      CHECK(verify_character(chi).passed());
      REQUIRE(chi.c_label.has_value());
      REQUIRE(chi.lambda_label.has_value());
      CHECK(*chi.lambda_label == chi.value("E11") + ParamScalar(k));
      CHECK(*chi.c_label == chi.value("C"));
    }
    CHECK(got == solve_scalar_system(k));
  }
}

TEST_CASE("characters: the five closed forms as (c, lambda)") {
  const G k(2, 7);
  std::set<std::pair<std::string, std::string>> expect;
  auto sq = [](const G& x) { return x * x; };
  expect.insert({"0", "0"});
  for (int s : {1, -1}) {
    const G sg(s);
    expect.insert({(sq(k + sg * G(3, 2)) - G(1)).str(), (k + sg * G(1, 2)).str()});
    expect.insert({(sq(k + sg * G(5, 2)) - G(1)).str(), (k + sg * G(3, 2)).str()});
  }
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& chi : enumerate_characters(IdoConfig::at(1, k)).characters)
    got.insert({chi.c_label->str(), chi.lambda_label->str()});
  CHECK(got == expect);
}

TEST_CASE("characters: only chi_f and chi_e in higher rank") {
  for (unsigned N = 2; N <= 3; ++N)
    for (const G k : {G(1, 3), G(-2), G(5, 2)}) {
      INFO("N = " << N << ", k = " << k.str());
      const IdoConfig cfg = IdoConfig::at(N, k);
      const CharacterSet set = enumerate_characters(cfg);
      REQUIRE(set.characters.size() == 2);
      const Character f = chi_f(cfg), e = chi_e(cfg);
      CHECK((set.characters[0] == f || set.characters[1] == f));
      CHECK((set.characters[0] == e || set.characters[1] == e));
      const G h(static_cast<long>(N), 2);
      CHECK(f.value("C") == ParamScalar((k + h) * (k + h + G(2))));
      CHECK(e.value("C") == ParamScalar((k - h) * (k - h - G(2))));
      CHECK(f.value("E11") == ParamScalar::rational(1, 2));
      CHECK(e.value("E12").is_zero());
    }
}

TEST_CASE("characters: chi_e is chi_f at -k pulled back along theta~") {
  for (unsigned N = 1; N <= 3; ++N) {
    const IdoConfig cfg = IdoConfig::symbolic(N);
    CHECK(pullback_theta(chi_f(cfg.negated())) == chi_e(cfg));
    CHECK(verify_character(chi_f(cfg)).passed());
    CHECK(verify_character(chi_e(cfg)).passed());
  }
}

TEST_CASE("characters: evaluation and linearity") {
  const IdoConfig cfg = IdoConfig::at(1, G(1, 5));
  const Character f = chi_f(cfg);
  const IdoElement x = ido_Etotal(cfg) * ParamScalar(3) + casimir(cfg);
  CHECK(evaluate(f, x) == f.value("E11") * ParamScalar(3) + f.value("C"));
  CHECK_THROWS_AS(evaluate(f, ido_P(cfg, 1, 1) * ido_Q(cfg, 1, 1)), DomainError);
}
