#include "jacobi/characters.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "jacobi/linalg.hpp"

namespace jacobi {

// ---------------------------------------------------------------------------
// NcPoly

NcPoly NcPoly::constant(const ParamScalar& s) {
  NcPoly p;
  p.add({}, s);
  return p;
}

NcPoly NcPoly::gen(std::size_t index) {
  NcPoly p;
  p.add({index}, 1);
  return p;
}

void NcPoly::add(const Word& w, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const ParamScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      NcPoly::Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

IdoElement NcPoly::evaluate(const IdoConfig& cfg, const std::vector<IdoGenerator>& gens) const {
  IdoElement out(cfg, IdoBasis::A);
  for (const auto& [w, c] : terms_) {
    IdoElement prod = IdoElement::scalar(cfg, c);
    for (auto g : w) prod = prod * gens.at(g).value;
    out += prod;
  }
  return out;
}

ParamScalar NcPoly::evaluate(const std::vector<ParamScalar>& values) const {
  ParamScalar out;
  for (const auto& [w, c] : terms_) {
    ParamScalar prod = c;
    for (auto g : w) {
      if (prod.is_zero()) break;
      prod *= values.at(g);
    }
    out += prod;
  }
  return out;
}

std::string NcPoly::str(const std::vector<IdoGenerator>& gens) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (auto g : w) os << "*" << gens.at(g).name;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Relations

namespace {

struct GenIndex {
  unsigned N;
  std::map<std::string, std::size_t> by_name;
  std::size_t at(char kind, unsigned r, unsigned s) const {
    if ((kind == 'P' || kind == 'Q') && r > s) std::swap(r, s);
    return by_name.at(std::string(1, kind) + std::to_string(r) + std::to_string(s));
  }
  NcPoly P(unsigned r, unsigned s) const { return NcPoly::gen(at('P', r, s)); }
  NcPoly Q(unsigned r, unsigned s) const { return NcPoly::gen(at('Q', r, s)); }
  NcPoly E(unsigned r, unsigned s) const { return NcPoly::gen(at('E', r, s)); }
  // f_r e_s = E_rs - delta_rs / 2
  NcPoly Ep(unsigned r, unsigned s) const {
    return E(r, s) - NcPoly::constant(r == s ? ParamScalar::rational(1, 2) : ParamScalar());
  }
  NcPoly C() const { return NcPoly::gen(by_name.at("C")); }
};

GenIndex index_of(const std::vector<IdoGenerator>& gens, unsigned N) {
  GenIndex idx{N, {}};
  for (std::size_t i = 0; i < gens.size(); ++i) idx.by_name[gens[i].name] = i;
  return idx;
}

NcPoly delta(unsigned a, unsigned b) { return NcPoly::constant(a == b ? 1 : 0); }

std::string tag(std::initializer_list<unsigned> idx) {
  std::string s = "[";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(i);
  }
  return s + "]";
}

std::vector<Relation> build_relations(const IdoConfig& cfg, const std::vector<IdoGenerator>& gens) {
  const unsigned N = cfg.N;
  const GenIndex g = index_of(gens, N);
  std::vector<Relation> out;
  auto push = [&out](std::string fam, std::string name, NcPoly p) {
    if (p.is_zero()) return;
    out.push_back({std::move(fam), std::move(name), std::move(p)});
  };
  auto comm = [](const NcPoly& a, const NcPoly& b) { return a * b - b * a; };
  const ParamScalar quarter = ParamScalar::rational(1, 4);

  NcPoly Et;
  for (unsigned r = 1; r <= N; ++r) Et += g.E(r, r);
  const NcPoly Hnu = NcPoly::constant(cfg.k) + Et;
  const NcPoly fe = quarter * (g.C() - Hnu * Hnu - Hnu * ParamScalar(2));
  const NcPoly ef = quarter * (g.C() - Hnu * Hnu + Hnu * ParamScalar(2));

  for (unsigned r = 1; r <= N; ++r)
    for (unsigned s = 1; s <= N; ++s)
      for (unsigned t = 1; t <= N; ++t)
        for (unsigned u = 1; u <= N; ++u)
          push("gl", "gl" + tag({r, s, t, u}),
               comm(g.E(r, s), g.E(t, u)) - delta(s, t) * g.E(r, u) + delta(u, r) * g.E(t, s));
  for (unsigned r = 1; r <= N; ++r)
    for (unsigned s = 1; s <= N; ++s)
      for (unsigned t = 1; t <= N; ++t)
        for (unsigned u = t; u <= N; ++u) {
          push("EP", "EP" + tag({r, s, t, u}),
               comm(g.E(r, s), g.P(t, u)) + delta(r, t) * g.P(s, u) + delta(r, u) * g.P(t, s));
          push("EQ", "EQ" + tag({r, s, t, u}),
               comm(g.E(r, s), g.Q(t, u)) - delta(s, t) * g.Q(r, u) - delta(s, u) * g.Q(t, r));
        }
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name != "C") push("central", "central[" + gens[i].name + "]", comm(g.C(), NcPoly::gen(i)));
  for (unsigned r = 1; r <= N; ++r)
    for (unsigned s = r; s <= N; ++s)
      for (unsigned t = 1; t <= N; ++t)
        for (unsigned u = t; u <= N; ++u) {
          // e_r e_s f_t f_u and f_t f_u e_r e_s rewritten through f_a e_b.
          NcPoly ee_ff = (g.Ep(t, r) + delta(r, t)) * (g.Ep(u, s) + delta(u, s)) + delta(s, t) * (g.Ep(u, r) + delta(u, r));
          NcPoly ff_ee = g.Ep(t, r) * g.Ep(u, s) - delta(r, u) * g.Ep(t, s);
          push("PQ", "PQ" + tag({r, s, t, u}), g.P(r, s) * g.Q(t, u) - fe * ee_ff);
          push("QP", "QP" + tag({t, u, r, s}), g.Q(t, u) * g.P(r, s) - ef * ff_ee);
        }
  for (unsigned r = 1; r <= N; ++r)
    for (unsigned s = 1; s <= N; ++s)
      for (unsigned t = 1; t <= N; ++t)
        for (unsigned u = 1; u <= N; ++u) {
          // f_r f_t e_s e_u is symmetric in r, t.
          push("quad", "quad" + tag({r, s, t, u}),
               g.Ep(r, s) * g.Ep(t, u) - delta(s, t) * g.Ep(r, u) - g.Ep(t, s) * g.Ep(r, u) +
                   delta(s, r) * g.Ep(t, u));
          push("PP", "PP" + tag({r, s, t, u}), g.P(r, s) * g.P(t, u) - g.P(r, t) * g.P(s, u));
          push("QQ", "QQ" + tag({r, s, t, u}), g.Q(r, s) * g.Q(t, u) - g.Q(r, t) * g.Q(s, u));
          push("EPsym", "EPsym" + tag({r, s, t, u}), g.Ep(r, s) * g.P(t, u) - g.Ep(r, t) * g.P(s, u));
          push("QEsym", "QEsym" + tag({r, s, t, u}), g.Q(t, u) * g.Ep(r, s) - g.Q(t, r) * g.Ep(u, s));
        }
  return out;
}

}  // namespace

const std::vector<Relation>& relations(const IdoConfig& cfg) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, std::string>, std::unique_ptr<std::vector<Relation>>> cache;
  const auto key = std::make_pair(cfg.N, cfg.k.str());
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto gens = generators(cfg);
  auto rels = std::make_unique<std::vector<Relation>>(build_relations(cfg, gens));
  for (const auto& r : *rels) {
    IdoElement v = r.poly.evaluate(cfg, gens);
    if (!v.is_zero())
      throw ConsistencyError("relation " + r.name + " does not vanish in D_k: " + v.str());
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(key, std::move(rels));
  return *it->second;
}

// ---------------------------------------------------------------------------
// Characters

ParamScalar Character::value(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return values[i];
  throw DomainError("unknown generator '" + name + "'");
}

std::string Character::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) os << ", ";
    os << names[i] << " -> " << values[i].str();
  }
  return os.str();
}

namespace {

Character make_character(const IdoConfig& cfg, std::vector<ParamScalar> values) {
  Character chi;
  chi.cfg = cfg;
  for (const auto& g : generators(cfg)) chi.names.push_back(g.name);
  chi.values = std::move(values);
  if (cfg.N == 1) {
    chi.c_label = chi.value("C");
    chi.lambda_label = chi.value("E11") + cfg.k;
  }
  return chi;
}

Character closed_form(const IdoConfig& cfg, int sign) {
  std::vector<ParamScalar> v;
  const ParamScalar shift = cfg.k + ParamScalar::rational(sign * static_cast<long>(cfg.N), 2);
  for (const auto& g : generators(cfg)) {
    if (g.name[0] == 'E') {
      v.push_back(g.name[1] == g.name[2] ? ParamScalar::rational(sign, 2) : ParamScalar());
    } else if (g.name == "C") {
      v.push_back(shift * (shift + ParamScalar(2L * sign)));
    } else {
      v.push_back(ParamScalar());
    }
  }
  return make_character(cfg, std::move(v));
}

}  // namespace

Character chi_f(const IdoConfig& cfg) { return closed_form(cfg, 1); }
Character chi_e(const IdoConfig& cfg) { return closed_form(cfg, -1); }

std::optional<std::vector<ParamScalar>> linear_in_generators(const IdoElement& x) {
  const IdoConfig& cfg = x.config();
  auto gens = generators(cfg);
  std::vector<IdoElement> cols;
  for (const auto& g : gens) cols.push_back(g.value.to(IdoBasis::B));
  cols.push_back(IdoElement::scalar(cfg, 1, IdoBasis::B));
  cols.push_back(x.to(IdoBasis::B));
  std::map<IdoMonomial, std::size_t> row;
  for (const auto& c : cols)
    for (const auto& [m, v] : c.terms()) row.try_emplace(m, 0);
  std::size_t n = 0;
  for (auto& [m, i] : row) i = n++;
  ScalarMatrix A(n, ScalarRow(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [m, v] : cols[j].terms()) A[row.at(m)][j] = v;
  for (const auto& v : nullspace(A, cols.size())) {
    if (!v.back().is_one()) continue;
    std::vector<ParamScalar> out;
    for (std::size_t j = 0; j + 1 < cols.size(); ++j) out.push_back(-v[j]);
    return out;
  }
  return std::nullopt;
}

ParamScalar evaluate(const Character& chi, const IdoElement& x) {
  if (!(chi.cfg == x.config())) throw DomainError("character and element belong to different configurations");
  auto coeffs = linear_in_generators(x);
  if (!coeffs) throw DomainError("element is not a linear combination of the generators");
  ParamScalar out = coeffs->back();
  for (std::size_t i = 0; i < chi.values.size(); ++i) out += (*coeffs)[i] * chi.values[i];
  return out;
}

Character pullback_theta(const Character& chi_at_minus_k) {
  const IdoConfig cfg = chi_at_minus_k.cfg.negated();
  std::vector<ParamScalar> v;
  for (const auto& g : generators(cfg)) v.push_back(evaluate(chi_at_minus_k, theta_tilde_k(g.value)));
  return make_character(cfg, std::move(v));
}

VerifyReport verify_character(const Character& chi) {
  VerifyReport rep;
  rep.suite = "character";
  const auto& rels = relations(chi.cfg);
  auto gens = generators(chi.cfg);
  std::map<std::string, std::string> failures;
  std::vector<std::string> families;
  for (const auto& r : rels) {
    if (std::find(families.begin(), families.end(), r.family) == families.end()) families.push_back(r.family);
    if (failures.count(r.family)) continue;
    ParamScalar v = r.poly.evaluate(chi.values);
    if (!v.is_zero()) failures[r.family] = r.name + " evaluates to " + v.str();
  }
  for (const auto& f : families) {
    auto it = failures.find(f);
    rep.add("chi." + f, "multiplicative on the " + f + " relations", it == failures.end(),
            it == failures.end() ? "" : it->second);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Solver

namespace {

ParamPoly derivative(const ParamPoly& p, Param v) {
  auto c = p.coefficients_in(v);
  std::vector<ParamPoly> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * GaussianRational(static_cast<long>(i)));
  return ParamPoly::from_coefficients(v, d);
}

ParamPoly squarefree(const ParamPoly& p, Param v) {
  if (p.degree_in(v) == 0) return p;
  ParamPoly g = gcd(p, derivative(p, v));
  return g.is_constant() ? p.monic() : p.exact_div(g).monic();
}

// Removes factors that only involve k.
ParamPoly strip_k_content(const ParamPoly& p) {
  if (p.is_zero() || !p.uses(Param::k)) return p.is_zero() ? p : p.monic();
  std::map<std::pair<unsigned, unsigned>, std::vector<ParamPoly::Term>> groups;
  for (const auto& [e, c] : p.terms()) {
    ParamExponents ke{};
    ke[static_cast<std::size_t>(Param::k)] = e[static_cast<std::size_t>(Param::k)];
    groups[{e[static_cast<std::size_t>(Param::mu)], e[static_cast<std::size_t>(Param::c)]}].push_back({ke, c});
  }
  ParamPoly g;
  for (auto& [key, terms] : groups) {
    g = gcd(g, ParamPoly::from_terms(terms));
    if (g.is_constant()) break;
  }
  return (g.is_constant() ? p : p.exact_div(g)).monic();
}

// Roots of p in the variable v over Q(i)(k): rational roots of the part free
// of k, plus a root of a remaining linear factor.
std::vector<ParamScalar> roots_in(const ParamPoly& p, Param v) {
  std::vector<ParamScalar> out;
  if (p.degree_in(v) == 0) return out;
  ParamPoly sqf = squarefree(p, v);
  ParamPoly free_part = sqf;
  ParamPoly rest(1);
  if (sqf.uses(Param::k)) {
    ParamPoly g;
    for (const auto& c : sqf.coefficients_in(Param::k)) g = gcd(g, c);
    free_part = g;
    rest = sqf.exact_div(g);
  }
  if (free_part.degree_in(v) > 0) {
    std::vector<mpq_class> rr;
    try {
      rr = rational_roots(free_part, v);
    } catch (const DomainError& e) {
      throw UnsupportedError(std::string("root finding needs real rational coefficients: ") + e.what());
    }
    if (rr.size() != free_part.degree_in(v))
      throw UnsupportedError("polynomial " + free_part.str() + " has roots outside Q");
    for (const auto& r : rr) out.emplace_back(GaussianRational(r));
  }
  const unsigned d = rest.degree_in(v);
  if (d == 1) {
    auto c = rest.coefficients_in(v);
    out.push_back(ParamScalar(-c[0], c[1]));
  } else if (d > 1) {
    throw UnsupportedError("factor " + rest.str() + " of degree " + std::to_string(d) + " in " +
                           std::string(param_name(v)));
  }
  return out;
}

void add_unique(std::vector<ParamPoly>& list, const ParamPoly& p) {
  if (p.is_zero()) return;
  if (std::find(list.begin(), list.end(), p) == list.end()) list.push_back(p);
}

struct Solved {
  std::vector<std::vector<ParamScalar>> solutions;
  std::vector<std::string> free_names;
  ParamPoly eliminant;
  bool inconsistent = false;
};

Solved solve(const IdoConfig& cfg, const std::vector<IdoGenerator>& gens, const std::vector<Relation>& rels) {
  Solved out;
  const std::size_t n = gens.size();
  // Linear stage: relations whose commutative image has degree <= 1.
  ScalarMatrix rows;
  for (const auto& r : rels) {
    std::map<NcPoly::Word, ParamScalar> collapsed;
    for (const auto& [w, c] : r.poly.terms()) {
      NcPoly::Word s = w;
      std::sort(s.begin(), s.end());
      auto& slot = collapsed[s];
      slot += c;
    }
    bool linear = true;
    ScalarRow row(n + 1);
    bool any = false;
    for (const auto& [w, c] : collapsed) {
      if (c.is_zero()) continue;
      if (w.size() > 1) {
        linear = false;
        break;
      }
      any = true;
      if (w.empty())
        row[n] += c;
      else
        row[w[0]] += c;
    }
    if (linear && any) rows.push_back(std::move(row));
  }
  // Canonical kernel: vector j has a 1 in the j-th free column.
  std::vector<std::size_t> free_cols;
  std::vector<ScalarRow> null;
  {
    std::vector<bool> pivot(n + 1, false);
    if (!rows.empty())
      for (auto p : echelon(rows, n + 1).pivots) pivot[p] = true;
    for (std::size_t j = 0; j <= n; ++j)
      if (!pivot[j]) free_cols.push_back(j);
    if (rows.empty()) {
      for (auto f : free_cols) {
        ScalarRow v(n + 1);
        v[f] = 1;
        null.push_back(v);
      }
    } else {
      null = nullspace(rows, n + 1);
    }
  }
  if (free_cols.empty() || free_cols.back() != n) {
    out.inconsistent = true;
    return out;
  }
  // The vector for the constant column is the particular solution.
  std::vector<ParamScalar> values(null.back().begin(), null.back().end() - 1);
  const std::string diag = "E" + std::to_string(cfg.N) + std::to_string(cfg.N);
  for (std::size_t j = 0; j + 1 < free_cols.size(); ++j) {
    const std::size_t f = free_cols[j];
    out.free_names.push_back(gens[f].name);
    ParamScalar param;
    if (gens[f].name == diag)
      param = ParamScalar::param(Param::mu);
    else if (gens[f].name == "C")
      param = ParamScalar::param(Param::c);
    else
      throw UnsupportedError("free generator value " + gens[f].name + " after the linear stage");
    for (std::size_t i = 0; i < n; ++i)
      if (!null[j][i].is_zero()) values[i] += null[j][i] * param;
  }

  // Polynomial stage in (mu, c).
  std::vector<ParamPoly> polys;
  for (const auto& r : rels) {
    ParamScalar s = r.poly.evaluate(values);
    if (s.is_zero()) continue;
    add_unique(polys, strip_k_content(s.num()));
  }
  for (const auto& p : polys)
    if (p.is_constant()) return out;  // no solutions
  auto uses_unknown = [](const ParamPoly& p) { return p.uses(Param::mu) || p.uses(Param::c); };
  const bool mu_free = std::find(out.free_names.begin(), out.free_names.end(), diag) != out.free_names.end();
  const bool c_free = std::find(out.free_names.begin(), out.free_names.end(), "C") != out.free_names.end();
  if (!polys.empty()) {
    ParamPoly all;
    for (const auto& p : polys) all = gcd(all, p);
    if (uses_unknown(all)) throw UnsupportedError("the character variety has a positive-dimensional component");
  }

  std::vector<ParamScalar> mu_roots;
  if (mu_free) {
    std::vector<ParamPoly> elim;
    for (const auto& p : polys)
      if (!p.uses(Param::c)) add_unique(elim, p);
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (std::size_t j = i + 1; j < polys.size(); ++j) {
        if (!polys[i].uses(Param::c) || !polys[j].uses(Param::c)) continue;
        add_unique(elim, strip_k_content(resultant(polys[i], polys[j], Param::c)));
      }
    if (!c_free) elim = polys;
    ParamPoly E;
    for (const auto& p : elim) E = gcd(E, p);
    if (E.is_zero()) throw UnsupportedError("no eliminant for the weight value");
    out.eliminant = E;
    mu_roots = roots_in(E, Param::mu);
  }


  auto at_mu = [&](const std::optional<ParamScalar>& x0) {
    std::vector<ParamScalar> vals = values;
    std::vector<ParamPoly> cp;
    for (const auto& p : polys) {
      ParamScalar s = x0 ? ParamScalar(p).substitute(Param::mu, *x0) : ParamScalar(p);
      if (!s.is_zero()) add_unique(cp, strip_k_content(s.num()));
    }
    if (x0)
      for (auto& x : vals) x = x.substitute(Param::mu, *x0);
    std::vector<ParamScalar> c_roots;
    if (c_free) {
      ParamPoly g;
      for (const auto& p : cp) g = gcd(g, p);
      if (g.is_zero()) throw UnsupportedError("the Casimir value is not determined");
      if (uses_unknown(g) && g.uses(Param::mu)) throw UnsupportedError("weight value not eliminated");
      c_roots = roots_in(g, Param::c);
    } else {
      for (const auto& p : cp)
        if (!p.is_zero()) return;
      out.solutions.push_back(vals);
      return;
    }
    for (const auto& c0 : c_roots) {
      bool ok = true;
      for (const auto& p : cp)
        if (!ParamScalar(p).substitute(Param::c, c0).is_zero()) ok = false;
      if (!ok) continue;
      std::vector<ParamScalar> w = vals;
      for (auto& x : w) x = x.substitute(Param::c, c0);
      out.solutions.push_back(std::move(w));
    }
  };
  if (mu_free) {
    for (const auto& x0 : mu_roots) at_mu(x0);
  } else {
    at_mu(std::nullopt);
  }
  return out;
}

bool value_less(const Character& a, const Character& b) {
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    auto sa = a.values[i].str(), sb = b.values[i].str();
    if (sa != sb) return sa < sb;
  }
  return false;
}

}  // namespace

CharacterSet enumerate_characters(const IdoConfig& cfg) {
  CharacterSet out;
  out.report.suite = "characters";
  auto gens = generators(cfg);
  const auto& rels = relations(cfg);
  out.report.add("relations.certified", "every relation instance vanishes in D_k", true);

  Solved s = solve(cfg, gens, rels);
  if (s.inconsistent) {
    out.report.add("linear.stage", "linear relations are consistent", false, "no affine solution");
    return out;
  }
  {
    std::string fn;
    for (const auto& f : s.free_names) fn += (fn.empty() ? "" : ",") + f;
    const std::string diag = "E" + std::to_string(cfg.N) + std::to_string(cfg.N);
    bool ok = fn == diag + ",C" || fn == "C," + diag;
    out.report.add("linear.stage", "commutator relations leave only the E and C values free", ok, "free: " + fn);
  }
  for (auto& vals : s.solutions) {
    Character chi = make_character(cfg, vals);
    if (std::find(out.characters.begin(), out.characters.end(), chi) == out.characters.end())
      out.characters.push_back(std::move(chi));
  }
  std::sort(out.characters.begin(), out.characters.end(), value_less);

  bool all_pass = true;
  std::string witness;
  for (const auto& chi : out.characters) {
    auto r = verify_character(chi);
    if (!r.passed()) {
      all_pass = false;
      witness = chi.str();
    }
  }
  out.report.add("characters.verified", "each solution is multiplicative on every relation", all_pass, witness);

  if (cfg.N >= 2) {
    // The off-diagonal quadratic relation forces the diagonal value to be +-1/2.
    const ParamPoly x = ParamPoly::variable(Param::mu);
    const ParamPoly expect = (x - ParamPoly(GaussianRational(1, 2))) * (x + ParamPoly(GaussianRational(1, 2)));
    bool forced = !s.eliminant.is_zero() && s.eliminant.degree_in(Param::mu) > 0 &&
                  pseudo_remainder(expect, s.eliminant, Param::mu).is_zero();
    out.report.add("forcing.weight", "E12 E21 = (E11 - 1/2)(E22 + 1/2) forces the E value to +-1/2", forced,
                   "eliminant " + s.eliminant.str());
    bool has_pq = false;
    for (const auto& r : rels)
      if (r.name == "PQ[1,1,1,1]") has_pq = true;
    out.report.add("forcing.product", "(F e1 e1)(E f1 f1) identity certified", has_pq);
    bool two = out.characters.size() == 2 && std::find(out.characters.begin(), out.characters.end(), chi_f(cfg)) !=
                                                 out.characters.end() &&
               std::find(out.characters.begin(), out.characters.end(), chi_e(cfg)) != out.characters.end();
    out.report.add("characters.two", "exactly chi_f and chi_e", two,
                   std::to_string(out.characters.size()) + " characters found");
  }
  if (cfg.symbolic_k()) {
    // Completeness witness at a generic rational k.
    const GaussianRational k0(37, 11);
    auto special = enumerate_characters(IdoConfig::at(cfg.N, k0));
    bool same = special.characters.size() == out.characters.size();
    for (const auto& chi : out.characters) {
      std::vector<ParamScalar> v;
      for (const auto& x : chi.values) v.push_back(x.substitute(Param::k, ParamScalar(k0)));
      Character spec = make_character(IdoConfig::at(cfg.N, k0), v);
      if (std::find(special.characters.begin(), special.characters.end(), spec) == special.characters.end())
        same = false;
    }
    out.report.add("characters.generic_k", "the families specialize to the full solution set at k = 37/11", same,
                   std::to_string(special.characters.size()) + " characters at k = 37/11");
  }
  return out;
}

}  // namespace jacobi
