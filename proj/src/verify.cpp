#include "jacobi/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "jacobi/characters.hpp"
#include "jacobi/pbw.hpp"
#include "jacobi/sl2_reps.hpp"

namespace jacobi {

namespace {

IdoConfig config_of(const SuiteOptions& o) {
  return o.k ? IdoConfig::at(o.N, *o.k) : IdoConfig::symbolic(o.N);
}

// Runs a check body, turning library exceptions into a failed check.
void guarded(VerifyReport& rep, const std::string& id, const std::string& anchor, const std::function<bool(std::string&)>& body) {
  std::string witness;
  bool ok = false;
  try {
    ok = body(witness);
  } catch (const std::exception& e) {
    witness = std::string("exception: ") + e.what();
  }
  rep.add(id, anchor, ok, witness);
}

UeaElement g(const AlgebraPtr& alg, const std::string& name) { return UeaElement::generator(alg, name); }

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lie",        "pbw",       "ido",     "relations", "center",
                                              "characters", "embedding", "modules", "isos"};
  return names;
}

VerifyReport verify_lie(unsigned max_N) {
  VerifyReport rep;
  rep.suite = "lie";
  for (unsigned N = 1; N <= max_N; ++N)
    for (auto kind : {BasisKind::standard, BasisKind::tilde}) {
      const std::string tag = (kind == BasisKind::standard ? "standard" : "tilde") + std::string(" N=") + std::to_string(N);
      guarded(rep, "lie.jacobi[" + tag + "]", "the Jacobi identity holds on all generator triples", [&](std::string& w) {
        auto v = make_jacobi(N, kind)->jacobi_violation();
        if (v) w = "triple " + std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) + "," + std::to_string((*v)[2]);
        return !v;
      });
    }
  guarded(rep, "lie.sl2", "sl2 presentation satisfies the Jacobi identity",
          [](std::string&) { return !make_sl2()->jacobi_violation(); });
  for (unsigned N = 1; N <= max_N; ++N) {
    const std::string n = "[N=" + std::to_string(N) + "]";
    guarded(rep, "lie.theta_order" + n, "theta has order four", [N](std::string&) {
      auto t = theta(N);
      return t.is_automorphism() && t.after(t).after(t).after(t).is_identity() && !t.after(t).is_identity();
    });
    guarded(rep, "lie.theta_tilde" + n, "theta~ is an automorphism of order four", [N](std::string&) {
      auto t = theta_tilde(N);
      return t.is_automorphism() && t.after(t).after(t).after(t).is_identity();
    });
    guarded(rep, "lie.tau" + n, "tau is an automorphism", [N](std::string&) { return tau(N).is_automorphism(); });
    guarded(rep, "lie.basis_change" + n, "the tilde basis has the standard structure constants", [N](std::string&) {
      auto s = make_jacobi(N, BasisKind::standard), t = make_jacobi(N, BasisKind::tilde);
      auto m = basis_change(s, t);
      return m.is_automorphism() && basis_change(t, s).after(m).is_identity();
    });
  }
  return rep;
}

VerifyReport verify_pbw() {
  VerifyReport rep;
  rep.suite = "pbw";
  const auto alg = uea_jacobi(1, BasisKind::standard);
  const auto E = g(alg, "E"), F = g(alg, "F"), H = g(alg, "H"), e = g(alg, "e1"), f = g(alg, "f1"), Z = g(alg, "Z11");
  guarded(rep, "pbw.EF", "E F = F E + H", [&](std::string& w) {
    w = (E * F).str();
    return E * F == F * E + H;
  });
  guarded(rep, "pbw.ef", "e1 f1 - f1 e1 = -2 Z11", [&](std::string& w) {
    auto x = e * f - f * e;
    w = x.str();
    return x == Z * ParamScalar(-2);
  });
  guarded(rep, "pbw.adH", "ad(H) e1 = e1", [&](std::string&) { return ad(alg->presentation()->index_of(GeneratorSymbol::make(GenKind::H)), e) == e; });
  guarded(rep, "pbw.casimir_forms", "H^2 + 2H + 4FE = H^2 - 2H + 4EF", [&](std::string&) {
    return casimir_sl2(alg) == H * H - H * ParamScalar(2) + E * F * ParamScalar(4);
  });
  guarded(rep, "pbw.associative", "products of mixed words associate", [&](std::string&) {
    auto a = E * f + H * ParamScalar(3), b = F * e * e - Z, c = f * H + E;
    return (a * b) * c == a * (b * c);
  });
  const auto sl2 = uea_sl2();
  guarded(rep, "pbw.sl2_casimir", "the sl2 Casimir commutes with x, y, h", [&](std::string&) {
    auto om = casimir_sl2(sl2);
    for (const char* n : {"x", "y", "h"})
      if (!commutator(om, g(sl2, n)).is_zero()) return false;
    return true;
  });
  guarded(rep, "pbw.theta_casimir", "theta fixes the sl2 Casimir",
          [&](std::string&) { return apply_map(theta(1), casimir_sl2(alg)) == casimir_sl2(alg); });
  guarded(rep, "pbw.tau_casimir", "tau fixes the sl2 Casimir",
          [&](std::string&) { return apply_map(tau(1), casimir_sl2(alg)) == casimir_sl2(alg); });

  const auto loc = uea_localized_rank1(BasisKind::standard);
  const auto nE = nu_rank1(loc, GenKind::E), nF = nu_rank1(loc, GenKind::F), nH = nu_rank1(loc, GenKind::H);
  guarded(rep, "nu.bracket", "[nu(E), nu(F)] = nu(H), [nu(H), nu(E)] = 2 nu(E), [nu(H), nu(F)] = -2 nu(F)",
          [&](std::string&) {
            return commutator(nE, nF) == nH && commutator(nH, nE) == nE * ParamScalar(2) &&
                   commutator(nH, nF) == nF * ParamScalar(-2);
          });
  guarded(rep, "nu.commutes", "nu(E), nu(F), nu(H) commute with e1, f1, Z11", [&](std::string& w) {
    for (const auto* x : {&nE, &nF, &nH})
      for (const char* n : {"e1", "f1", "Z11"})
        if (!commutator(*x, g(loc, n)).is_zero()) {
          w = std::string("fails against ") + n;
          return false;
        }
    return true;
  });
  guarded(rep, "nu.H_form", "nu(H) = H - (1/2)(f1 W e1 - 1)", [&](std::string&) {
    auto W = g(loc, "W");
    return nH == g(loc, "H") - (g(loc, "f1") * W * g(loc, "e1") - UeaElement::scalar(loc, 1)) * ParamScalar::rational(1, 2);
  });
  guarded(rep, "omega.no_W", "Z11 (nu(Omega) - 5/4) has no W after cancellation", [&](std::string&) {
    omega_rank1(loc);
    return true;
  });
  guarded(rep, "omega.augmentation", "Omega_1 has constant term 0",
          [&](std::string&) { return omega_rank1(loc).constant_term().is_zero(); });
  guarded(rep, "omega.central", "Omega_1 commutes with every generator", [&](std::string&) {
    auto om = drop_localization(omega_rank1(loc), alg);
    for (std::size_t j = 0; j < alg->size(); ++j)
      if (!commutator(om, UeaElement::generator(alg, j)).is_zero()) return false;
    return true;
  });
  guarded(rep, "omega.tau", "tau(Omega_1) = (i/2) Omega_1", [&](std::string& w) {
    auto om = drop_localization(omega_rank1(loc), alg);
    auto t = apply_map(tau(1), om);
    w = t.str();
    return t == om * ParamScalar(GaussianRational(mpq_class(0), mpq_class(1, 2)));
  });
  return rep;
}

VerifyReport verify_ido(const IdoConfig& cfg, unsigned degree) {
  VerifyReport rep;
  rep.suite = "ido N=" + std::to_string(cfg.N) + " k=" + cfg.k_label();
  rep.append(verify_aN(cfg));
  const auto monos = monomials(cfg.N, IdoBasis::A, degree);
  guarded(rep, "ido.round_trip", "basis A -> B -> A is the identity on the degree slice", [&](std::string& w) {
    for (const auto& m : monos) {
      auto x = IdoElement::monomial(cfg, IdoBasis::A, m);
      auto y = x.to(IdoBasis::B).to(IdoBasis::A);
      if (!(y.terms() == x.terms())) {
        w = x.str();
        return false;
      }
    }
    return true;
  });
  guarded(rep, "ido.slice_dimension", "basis A and basis B slices have equal dimension", [&](std::string& w) {
    const auto b = monomials(cfg.N, IdoBasis::B, degree, true);
    std::vector<IdoElement> imgs;
    for (const auto& m : b) imgs.push_back(IdoElement::monomial(cfg, IdoBasis::B, m).to(IdoBasis::A));
    const auto d = span_dimension(imgs);
    w = std::to_string(d) + " vs " + std::to_string(monos.size());
    return d == monos.size() && b.size() == monos.size();
  });
  guarded(rep, "ido.theta_involution", "theta~_{-k} theta~_k is the identity", [&](std::string& w) {
    for (const auto& m : monos) {
      auto x = IdoElement::monomial(cfg, IdoBasis::A, m);
      if (!(theta_tilde_k(theta_tilde_k(x)) == x)) {
        w = x.str();
        return false;
      }
    }
    return true;
  });
  guarded(rep, "ido.theta_multiplicative", "theta~_k is multiplicative on the degree slice", [&](std::string& w) {
    for (std::size_t i = 0; i < monos.size(); i += 3)
      for (std::size_t j = 1; j < monos.size(); j += 5) {
        auto a = IdoElement::monomial(cfg, IdoBasis::A, monos[i]);
        auto b = IdoElement::monomial(cfg, IdoBasis::A, monos[j]);
        if (!(theta_tilde_k(a * b) == theta_tilde_k(a) * theta_tilde_k(b))) {
          w = a.str() + " ; " + b.str();
          return false;
        }
      }
    return true;
  });
  if (cfg.N == 1)
    guarded(rep, "ido.ideal_Lf", "products of non-identity monomials have no constant term", [&](std::string& w) {
      const auto one = IdoMonomial::one(1);
      for (const auto& a : monos)
        for (const auto& b : monos) {
          if (a.is_one() || b.is_one()) continue;
          auto p = IdoElement::monomial(cfg, IdoBasis::A, a) * IdoElement::monomial(cfg, IdoBasis::A, b);
          if (!p.coefficient(one).is_zero()) {
            w = p.str();
            return false;
          }
        }
      return true;
    });
  return rep;
}

VerifyReport verify_relations(const IdoConfig& cfg) {
  VerifyReport rep;
  rep.suite = "relations N=" + std::to_string(cfg.N) + " k=" + cfg.k_label();
  std::map<std::string, std::size_t> count;
  guarded(rep, "relations.certified", "every relation instance vanishes in D_k", [&](std::string& w) {
    for (const auto& r : relations(cfg)) ++count[r.family];
    w = std::to_string(count.size()) + " families";
    return !count.empty();
  });
  for (const auto& [fam, n] : count) rep.add("relations.family." + fam, std::to_string(n) + " instances vanish", true);
  if (cfg.N != 1) return rep;

  const IdoConfig neg = cfg.negated();
  struct Rank1 {
    IdoElement P, Q, E, C, one;
    ParamScalar k;
  };
  auto rank1 = [](const IdoConfig& c) {
    return Rank1{ido_P(c, 1, 1), ido_Q(c, 1, 1), ido_Ers(c, 1, 1), casimir(c), IdoElement::scalar(c, 1), c.k};
  };
  const ParamScalar quarter = ParamScalar::rational(1, 4), half = ParamScalar::rational(1, 2),
                    three_halves = ParamScalar::rational(3, 2);
  auto fe_rhs = [&](const Rank1& r) {
    return quarter * ((r.E + r.one * half) * (r.E + r.one * three_halves) *
                      (r.C - (r.E + r.one * r.k) * (r.E + r.one * (r.k + 2))));
  };
  auto ef_rhs = [&](const Rank1& r) {
    return quarter * ((r.E - r.one * half) * (r.E - r.one * three_halves) *
                      (r.C - (r.E + r.one * r.k) * (r.E + r.one * (r.k - 2))));
  };
  const Rank1 a = rank1(cfg), b = rank1(neg);
  guarded(rep, "relations.weight", "ad(E) sends P to -2P and Q to 2Q", [&](std::string&) {
    return commutator(a.E, a.P) == a.P * ParamScalar(-2) && commutator(a.E, a.Q) == a.Q * ParamScalar(2);
  });
  guarded(rep, "relations.central", "C commutes with P, Q, E", [&](std::string&) {
    return commutator(a.C, a.P).is_zero() && commutator(a.C, a.Q).is_zero() && commutator(a.C, a.E).is_zero();
  });
  guarded(rep, "relations.PQ", "P Q = (1/4)(E + 1/2)(E + 3/2)(C - (E + k)(E + k + 2))", [&](std::string& w) {
    w = (a.P * a.Q - fe_rhs(a)).str();
    return a.P * a.Q == fe_rhs(a);
  });
  guarded(rep, "relations.QP", "Q P = (1/4)(E - 1/2)(E - 3/2)(C - (E + k)(E + k - 2))", [&](std::string& w) {
    w = (a.Q * a.P - ef_rhs(a)).str();
    return a.Q * a.P == ef_rhs(a);
  });
  guarded(rep, "relations.theta_generators", "theta~ sends P to -Q, Q to -P, E to -E and C to C",
          [&](std::string&) {
            return theta_tilde_k(b.P) == -a.Q && theta_tilde_k(b.Q) == -a.P && theta_tilde_k(b.E) == -a.E &&
                   theta_tilde_k(b.C) == a.C;
          });
  guarded(rep, "relations.theta_image", "theta~ of the P Q relation in D_{-k} is the Q P relation in D_k",
          [&](std::string&) {
            return theta_tilde_k(b.P * b.Q) == a.Q * a.P && theta_tilde_k(fe_rhs(b)) == ef_rhs(a);
          });
  return rep;
}

VerifyReport verify_center(const IdoConfig& cfg, unsigned degree) {
  VerifyReport rep;
  rep.suite = "center N=" + std::to_string(cfg.N) + " k=" + cfg.k_label() + " degree<=" + std::to_string(degree);
  const auto gens = generators(cfg);
  const IdoElement C = casimir(cfg);
  guarded(rep, "center.casimir_central", "C commutes with every generator", [&](std::string& w) {
    for (const auto& gen : gens)
      if (!commutator(C, gen.value).is_zero()) {
        w = gen.name;
        return false;
      }
    return true;
  });
  std::vector<IdoElement> S;
  for (const auto& gen : gens) S.push_back(gen.value);
  guarded(rep, "center.commutant", "the commutant of the generators is spanned by powers of C", [&](std::string& w) {
    const auto basis = commutant(cfg, S, degree);
    std::vector<IdoElement> powers;
    IdoElement p = IdoElement::scalar(cfg, 1, IdoBasis::B);
    for (unsigned j = 0; 2 * j <= degree; ++j) {
      powers.push_back(p);
      p = p * C;
    }
    auto joint = basis;
    joint.insert(joint.end(), powers.begin(), powers.end());
    const auto d = span_dimension(joint);
    w = "commutant dimension " + std::to_string(basis.size()) + ", expected " + std::to_string(powers.size());
    return basis.size() == powers.size() && d == powers.size();
  });
  return rep;
}

VerifyReport verify_characters(const IdoConfig& cfg) {
  VerifyReport rep;
  rep.suite = "characters N=" + std::to_string(cfg.N) + " k=" + cfg.k_label();
  const auto set = enumerate_characters(cfg);
  rep.append(set.report);
  for (const auto& chi : set.characters) {
    auto v = verify_character(chi);
    rep.add("characters.verify[" + chi.str() + "]", "multiplicative on every relation", v.passed(),
            v.passed() ? "" : v.checks.front().witness);
  }
  std::size_t expected = 2;
  if (cfg.N == 1) {
    expected = 5;
    if (auto k = cfg.k.constant_value()) {
      for (const auto& s : {GaussianRational(1, 2), GaussianRational(-1, 2), GaussianRational(3, 2), GaussianRational(-3, 2)})
        if (*k == s) expected = 4;
    }
  }
  rep.add("characters.count", "number of characters", set.characters.size() == expected,
          std::to_string(set.characters.size()) + " vs " + std::to_string(expected));
  rep.add("characters.chi_f_chi_e", "chi^f and chi^e are among them",
          std::find(set.characters.begin(), set.characters.end(), chi_f(cfg)) != set.characters.end() &&
              std::find(set.characters.begin(), set.characters.end(), chi_e(cfg)) != set.characters.end());
  return rep;
}

VerifyReport verify_modules(const GaussianRational& k) {
  VerifyReport rep;
  rep.suite = "modules k=" + k.str();
  using G = GaussianRational;
  const G half(1, 2), three_halves(3, 2);
  // (c, lambda): generic, each boundary clause on either side, and the one-dimensional cases.
  const std::vector<std::pair<G, G>> grid{
      {G(2), G(1, 3) + k},
      {G(2), k + half + G(4)},
      {G(2), k + three_halves + G(2)},
      {G(2), k - half - G(4)},
      {G(2), k - three_halves - G(2)},
      {G(8), G(0)},
      {G(-1), G(3)},
      {G(-1), G(-3)},
      {G(0), G(0)},
      {(k + three_halves) * (k + three_halves) - G(1), k + half},
      {(k - three_halves) * (k - three_halves) - G(1), k - half},
      {(k + G(5, 2)) * (k + G(5, 2)) - G(1), k + three_halves},
      {(k - G(5, 2)) * (k - G(5, 2)) - G(1), k - three_halves},
  };
  for (const auto& [c, lambda] : grid) {
    const auto m = build_module(ModuleKind::Vk, {k, c, lambda, 0});
    auto v = verify_module(m);
    for (auto& ch : v.checks) ch.id += "[" + m.spec.label() + "]";
    rep.append(v);
    rep.add("modules.irreducible[" + m.spec.label() + "]", "V_k(c, lambda) is irreducible", is_irreducible(m));
  }
  // Restrictions of L(n).
  for (unsigned n = 0; n <= 6; ++n) {
    const G top(static_cast<long>(n));
    for (long j = 0; j <= static_cast<long>(n); ++j) {
      const G w = top - G(2 * j);
      for (const G& kk : {w - half, w + half}) {
        ModuleParams p{kk, G(0), top, n};
        const auto m = build_module(ModuleKind::L, p);
        const auto r = restrict_sl2(m, kk);
        auto rr = r.report;
        for (auto& ch : rr.checks) ch.id += "[L(" + std::to_string(n) + "), k=" + kk.str() + "]";
        rep.append(rr);
      }
    }
  }
  return rep;
}

VerifyReport run_suite(const std::string& name, const SuiteOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  const IdoConfig cfg = config_of(o);
  auto need_rank1 = [&]() {
    if (o.N != 1) throw DomainError("suite " + name + " is defined for N = 1");
  };
  if (name == "lie") {
    rep = verify_lie(o.degree.value_or(4));
  } else if (name == "pbw") {
    rep = verify_pbw();
  } else if (name == "ido") {
    rep = verify_ido(cfg, o.degree.value_or(4));
  } else if (name == "relations") {
    rep = verify_relations(cfg);
  } else if (name == "center") {
    rep = verify_center(cfg, o.degree.value_or(o.N == 1 ? 6 : 4));
  } else if (name == "characters") {
    rep = verify_characters(cfg);
  } else if (name == "embedding") {
    need_rank1();
    rep = verify_embedding(cfg, o.degree.value_or(4));
  } else if (name == "modules") {
    need_rank1();
    rep = verify_modules(o.k.value_or(GaussianRational(1, 3)));
  } else if (name == "isos") {
    need_rank1();
    rep = verify_isos(o.k.value_or(GaussianRational(2, 7)));
  } else {
    throw DomainError("unknown suite '" + name + "'");
  }
  if (rep.suite.empty()) rep.suite = name;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace jacobi
