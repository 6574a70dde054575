#include <doctest.h>

#include <algorithm>

#include "jacobi/sl2_reps.hpp"
#include "support/oracles.hpp"

using namespace jacobi;

using namespace oracle;

TEST_CASE("modules: delta set agrees with scanning the action coefficients") {
  const std::vector<G> ks{G(0), G(1, 3), G(-1, 2), G(2)};
  const std::vector<G> cs{G(0), G(3), G(-1), G(8), G(5, 4), G(15)};
  for (const auto& k : ks)
    for (const auto& c : cs)
      for (long l = -6; l <= 6; ++l)
        for (const G lambda : {G(l), G(l) + k + G(1, 2), G(l) + k - G(1, 2)}) {
          INFO("k = " << k.str() << ", c = " << c.str() << ", lambda = " << lambda.str());
          const DeltaSet a = delta_set(c, lambda, k), b = delta_by_scan(c, lambda, k, 60);
          CHECK(a.m_minus == b.m_minus);
          CHECK(a.m_plus == b.m_plus);
        }
}

TEST_CASE("modules: Vk coefficients satisfy PQ = alpha and QP = beta") {
  const G k(1, 3);
  for (const auto& [c, lambda] : std::vector<std::pair<G, G>>{{G(3), G(1)}, {G(0), G(0)}, {G(7, 2), G(1, 5)}}) {
    const WeightModule m = build_module(ModuleKind::Vk, {k, c, lambda, 0});
    CHECK(verify_module(m).passed());
    for (const auto& mu : m.spec.window(lambda - G(10), lambda + G(10))) {
      if (m.spec.contains(mu - G(2))) CHECK(m.q_at(mu - G(2)) * m.p_at(mu) == beta_at(c, k, mu));
      if (m.spec.contains(mu + G(2))) CHECK(m.p_at(mu + G(2)) * m.q_at(mu) == alpha_at(c, k, mu));
      CHECK(m.e_at(mu) == mu - k);
    }
  }
}

TEST_CASE("modules: one-dimensional Vk are the five closed forms") {
  const G k(1, 3);
  const std::vector<std::pair<G, G>> five{{G(0), G(0)},
                                          {(k + G(3, 2)) * (k + G(3, 2)) - G(1), k + G(1, 2)},
                                          {(k - G(3, 2)) * (k - G(3, 2)) - G(1), k - G(1, 2)},
                                          {(k + G(5, 2)) * (k + G(5, 2)) - G(1), k + G(3, 2)},
                                          {(k - G(5, 2)) * (k - G(5, 2)) - G(1), k - G(3, 2)}};
  for (const auto& [c, lambda] : five) CHECK(build_module(ModuleKind::Vk, {k, c, lambda, 0}).spec.dimension() == 1u);
  CHECK(build_module(ModuleKind::Vk, {k, G(3), G(0), 0}).spec.dimension() != 1u);
}

TEST_CASE("modules: equivalence is (c, support) equality") {
  const G k(1, 3);
  const WeightModule a = build_module(ModuleKind::Vk, {k, G(3), G(0), 0});
  const WeightModule b = build_module(ModuleKind::Vk, {k, G(3), G(2), 0});
  const WeightModule c = build_module(ModuleKind::Vk, {k, G(4), G(0), 0});
  CHECK(equivalent(a, b) == (delta_set(G(3), G(0), k).m_minus == delta_set(G(3), G(2), k).m_minus));
  CHECK_FALSE(equivalent(a, c));
  CHECK(equivalent(a, a));
}

TEST_CASE("modules: restrictions of L(n) against explicit matrices") {
  for (unsigned n = 0; n <= 6; ++n) {
    const LMatrices L = l_module(n);
    const WeightModule ln = build_module(ModuleKind::L, {G(0), G(0), G(static_cast<long>(n)), n});
    for (long twice = -2 * static_cast<long>(n) - 5; twice <= 2 * static_cast<long>(n) + 5; twice += 2) {
      const G k(twice, 2);
      INFO("n = " << n << ", k = " << k.str());
      const IotaImages img = iota_generators(IdoConfig::at(1, k));
      const Mat P = act(img.P, L), Q = act(img.Q, L), E = act(img.E, L), C = act(img.C, L);
      const std::size_t d = n + 1;
      // weight of v_j is n - 2j; P lowers (j -> j+1), Q raises
      std::vector<G> weight(d);
      for (std::size_t j = 0; j < d; ++j) {
        weight[j] = G(static_cast<long>(n) - 2 * static_cast<long>(j));
        CHECK(E[j][j] == weight[j] - k);
        CHECK(C[j][j] == C[0][0]);
      }
      // invariant upper intervals start where P vanishes, lower ones end where Q vanishes
      std::vector<Interval> invariant;
      for (std::size_t j = 0; j + 1 < d; ++j) {
        if (P[j + 1][j].is_zero()) invariant.push_back({weight[j], G(static_cast<long>(n))});
        if (Q[j][j + 1].is_zero()) invariant.push_back({G(-static_cast<long>(n)), weight[j + 1]});
      }
      const Restriction r = restrict_sl2(ln, k);
      CHECK(r.report.passed());
      CHECK(r.splits == !invariant.empty());
      if (!r.splits) continue;
      CHECK(std::find(invariant.begin(), invariant.end(), r.sub) != invariant.end());
      const auto count = [](const Interval& iv) {
        return static_cast<std::size_t>(((*iv.upper - *iv.lower) / G(2)).as_integer().value() + 1);
      };
      CHECK(count(r.sub) + count(r.quotient) == d);
      const auto inside = [](const Interval& iv, const G& mu) {
        return !((mu - *iv.lower).re() < 0) && !((*iv.upper - mu).re() < 0);
      };
      for (const auto& mu : weight) CHECK(inside(r.sub, mu) != inside(r.quotient, mu));
    }
  }
}

TEST_CASE("modules: isomorphism decision") {
  CHECK(iso_decision(G(1, 3), G(-1, 3)));
  CHECK(iso_decision(G(2), G(2)));
  CHECK_FALSE(iso_decision(G(1, 3), G(2, 3)));
}
