#include "jacobi/sl2_reps.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "jacobi/linalg.hpp"

namespace jacobi {

namespace {

void require_rank_one(const IdoConfig& cfg) {
  if (cfg.N != 1) throw DomainError("the embedding into U(sl2) exists for N = 1 only");
}

const GaussianRational kHalf(1, 2);
const GaussianRational kThreeHalves(3, 2);

ParamScalar mu_var() { return ParamScalar::param(Param::mu); }

GaussianRational at_mu(const ParamScalar& f, const GaussianRational& mu) { return f.evaluate({{Param::mu, mu}}); }

ParamScalar shift_mu(const ParamScalar& f, long by) { return f.substitute(Param::mu, mu_var() + ParamScalar(by)); }

// Offset j with mu = lambda + 2j, when mu lies in the coset.
std::optional<long> offset(const GaussianRational& lambda, const GaussianRational& mu) {
  GaussianRational j = (mu - lambda) * GaussianRational(1, 2);
  return j.as_integer();
}

// Integers j with a j^2 + b j + c = 0 (Gaussian coefficients).
std::vector<long> integer_solutions(const GaussianRational& a, const GaussianRational& b, const GaussianRational& c) {
  const ParamPoly j = ParamPoly::variable(Param::mu);
  std::optional<std::set<long>> acc;
  for (int part = 0; part < 2; ++part) {
    auto pick = [part](const GaussianRational& g) { return GaussianRational(part == 0 ? g.re() : g.im()); };
    ParamPoly p = ParamPoly(pick(a)) * j * j + ParamPoly(pick(b)) * j + ParamPoly(pick(c));
    if (p.is_zero()) continue;
    std::set<long> here;
    if (!p.is_constant()) {
      for (const auto& r : rational_roots(p, Param::mu)) {
        auto v = GaussianRational(r).as_integer();
        if (v) here.insert(*v);
      }
    }
    if (!acc) {
      acc = here;
    } else {
      std::set<long> both;
      std::set_intersection(acc->begin(), acc->end(), here.begin(), here.end(), std::inserter(both, both.end()));
      acc = both;
    }
  }
  if (!acc) throw UnsupportedError("every weight satisfies the condition");
  return {acc->begin(), acc->end()};
}

// Offsets j of weights lambda + 2j where mu = target.
std::vector<long> point_offsets(const GaussianRational& lambda, const GaussianRational& target) {
  auto j = offset(lambda, target);
  return j ? std::vector<long>{*j} : std::vector<long>{};
}

// Offsets of mu = lambda + 2j with (mu + s)^2 = c + 1.
std::vector<long> square_offsets(const GaussianRational& c, const GaussianRational& lambda, long s) {
  GaussianRational l = lambda + GaussianRational(s);
  return integer_solutions(4, l * GaussianRational(4), l * l - c - GaussianRational(1));
}

// Zeros of alpha on the coset, as offsets.
std::vector<long> alpha_zero_offsets(const GaussianRational& c, const GaussianRational& lambda,
                                     const GaussianRational& k) {
  std::set<long> out;
  for (auto j : point_offsets(lambda, k - kHalf)) out.insert(j);
  for (auto j : point_offsets(lambda, k - kThreeHalves)) out.insert(j);
  for (auto j : square_offsets(c, lambda, 1)) out.insert(j);
  return {out.begin(), out.end()};
}

bool le(const std::optional<GaussianRational>& a, const GaussianRational& lambda, const GaussianRational& mu) {
  // a <= mu in the coset order; nullopt is -infinity
  if (!a) return true;
  return *offset(lambda, *a) <= *offset(lambda, mu);
}

GaussianRational weight_at(const GaussianRational& lambda, long j) { return lambda + GaussianRational(2 * j); }

}  // namespace

// ---------------------------------------------------------------------------
// Embedding

IotaImages iota_generators(const IdoConfig& cfg) {
  require_rank_one(cfg);
  auto alg = uea_sl2();
  auto x = UeaElement::generator(alg, "x");
  auto y = UeaElement::generator(alg, "y");
  auto h = UeaElement::generator(alg, "h");
  auto one = UeaElement::scalar(alg, 1);
  const ParamScalar k = cfg.k;
  return {y * (h - one * (k + ParamScalar::rational(1, 2))), x * (h - one * (k - ParamScalar::rational(1, 2))),
          h - one * k, casimir_sl2(alg)};
}

UeaElement iota(const IdoElement& a) {
  const IdoConfig& cfg = a.config();
  require_rank_one(cfg);
  auto alg = uea_sl2();
  const auto g = iota_generators(cfg);
  auto h = UeaElement::generator(alg, "h");
  auto one = UeaElement::scalar(alg, 1);
  UeaElement out(alg);
  const IdoElement b = a.to(IdoBasis::B);
  for (const auto& [m, c] : b.terms()) {
    UeaElement img = one;
    const long nf = m.If[0];
    const long ne = m.Ie[0];
    if (m.iF > 0) {
      // F^a f^I e^(2a+I) = (F e^2)^a g(E - 2a), g(E) = f^I e^I = prod_{j<I} (E - 1/2 - j)
      img = g.P.pow(m.iF);
      for (long j = 0; j < nf; ++j)
        img = img * (h - one * (cfg.k + ParamScalar(2L * m.iF + j) + ParamScalar::rational(1, 2)));
    } else if (m.iE > 0) {
      img = g.Q.pow(m.iE);
      for (long j = 0; j < ne; ++j) img = img * (h - one * (cfg.k + ParamScalar(j) + ParamScalar::rational(1, 2)));
    } else {
      for (long j = 0; j < nf; ++j) img = img * (h - one * (cfg.k + ParamScalar(j) + ParamScalar::rational(1, 2)));
    }
    if (m.iC > 0) img = img * g.C.pow(m.iC);
    out += img * c;
  }
  return out;
}

VerifyReport verify_embedding(const IdoConfig& cfg, unsigned max_degree) {
  require_rank_one(cfg);
  VerifyReport rep;
  rep.suite = "embedding";
  auto alg = uea_sl2();
  const auto g = iota_generators(cfg);
  auto gens = generators(cfg);
  std::vector<UeaElement> images;
  for (const auto& gen : gens) images.push_back(iota(gen.value));
  const bool named = images[0] == g.P && images[1] == g.Q && images[2] == g.E && images[3] == g.C;
  rep.add("embedding.images", "iota on the generators: y(h-k-1/2), x(h-k+1/2), h-k, omega", named,
          images[0].str() + "; " + images[1].str() + "; " + images[2].str() + "; " + images[3].str());

  std::map<std::string, std::string> failures;
  std::vector<std::string> families;
  for (const auto& r : relations(cfg)) {
    if (std::find(families.begin(), families.end(), r.family) == families.end()) families.push_back(r.family);
    if (failures.count(r.family)) continue;
    UeaElement v(alg);
    for (const auto& [w, c] : r.poly.terms()) {
      UeaElement t = UeaElement::scalar(alg, c);
      for (auto i : w) t = t * images.at(i);
      v += t;
    }
    if (!v.is_zero()) failures[r.family] = r.name + " maps to " + v.str();
  }
  for (const auto& f : families) {
    auto it = failures.find(f);
    rep.add("embedding." + f, "images satisfy the " + f + " relations in U(sl2)", it == failures.end(),
            it == failures.end() ? "" : it->second);
  }

  // Injectivity on a bounded slice.
  auto mons = monomials(1, IdoBasis::B, max_degree);
  std::vector<UeaElement> imgs;
  std::map<Monomial, std::size_t> col;
  for (const auto& m : mons) {
    imgs.push_back(iota(IdoElement::monomial(cfg, IdoBasis::B, m)));
    for (const auto& [pm, c] : imgs.back().terms()) col.try_emplace(pm, 0);
  }
  std::size_t n = 0;
  for (auto& [pm, i] : col) i = n++;
  ScalarMatrix A;
  for (const auto& im : imgs) {
    ScalarRow row(n);
    for (const auto& [pm, c] : im.terms()) row[col.at(pm)] = c;
    A.push_back(std::move(row));
  }
  const std::size_t rk = n == 0 ? 0 : rank(A, n);
  rep.add("embedding.injective", "images of basis-B monomials of bounded degree are linearly independent",
          rk == mons.size(), std::to_string(rk) + " of " + std::to_string(mons.size()));

  // Multiplicativity on products of generators.
  bool mult = true;
  std::string w;
  for (std::size_t i = 0; i < gens.size() && mult; ++i)
    for (std::size_t j = 0; j < gens.size() && mult; ++j)
      if (!(iota(gens[i].value * gens[j].value) == images[i] * images[j])) {
        mult = false;
        w = gens[i].name + "*" + gens[j].name;
      }
  rep.add("embedding.multiplicative", "iota(a b) = iota(a) iota(b) on generator pairs", mult, w);
  return rep;
}

// ---------------------------------------------------------------------------
// Weight sets

DeltaSet delta_set(const GaussianRational& c, const GaussianRational& lambda, const GaussianRational& k) {
  DeltaSet d;
  std::optional<long> lo, hi;
  auto take_lo = [&lo](long j) {
    if (j <= 0 && (!lo || j > *lo)) lo = j;
  };
  auto take_hi = [&hi](long j) {
    if (j >= 0 && (!hi || j < *hi)) hi = j;
  };
  for (auto j : point_offsets(lambda, k + kHalf)) take_lo(j);
  for (auto j : point_offsets(lambda, k + kThreeHalves)) take_lo(j);
  for (auto j : square_offsets(c, lambda, -1)) take_lo(j);
  for (auto j : point_offsets(lambda, k - kHalf)) take_hi(j);
  for (auto j : point_offsets(lambda, k - kThreeHalves)) take_hi(j);
  for (auto j : square_offsets(c, lambda, 1)) take_hi(j);
  if (lo) d.m_minus = weight_at(lambda, *lo);
  if (hi) d.m_plus = weight_at(lambda, *hi);
  return d;
}

std::string module_kind_name(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::Vk: return "Vk";
    case ModuleKind::L: return "L";
    case ModuleKind::Mminus: return "Mminus";
    case ModuleKind::Mplus: return "Mplus";
    case ModuleKind::P: return "P";
  }
  return "?";
}

std::optional<ModuleKind> module_kind_from_name(const std::string& s) {
  for (auto k : {ModuleKind::Vk, ModuleKind::L, ModuleKind::Mminus, ModuleKind::Mplus, ModuleKind::P})
    if (module_kind_name(k) == s) return k;
  return std::nullopt;
}

bool WeightModuleSpec::contains(const GaussianRational& mu) const {
  auto j = offset(lambda, mu);
  if (!j) return false;
  if (lower && *j < *offset(lambda, *lower)) return false;
  if (upper && *j > *offset(lambda, *upper)) return false;
  return true;
}

std::optional<std::size_t> WeightModuleSpec::dimension() const {
  if (!lower || !upper) return std::nullopt;
  return static_cast<std::size_t>(*offset(lambda, *upper) - *offset(lambda, *lower) + 1);
}

std::vector<GaussianRational> WeightModuleSpec::window(const GaussianRational& from, const GaussianRational& to) const {
  std::vector<GaussianRational> out;
  GaussianRational start = from;
  // First coset point at or above `from` (real parts compared).
  GaussianRational d = (from - lambda) * GaussianRational(1, 2);
  if (!d.is_real()) return out;
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), d.re().get_num_mpz_t(), d.re().get_den_mpz_t());
  long j0 = q.get_si();
  for (long j = j0;; ++j) {
    GaussianRational mu = weight_at(lambda, j);
    if ((mu - to).re() > 0) break;
    if (contains(mu)) out.push_back(mu);
  }
  return out;
}

std::vector<GaussianRational> WeightModuleSpec::weights() const {
  if (!lower || !upper) throw DomainError("module " + label() + " is infinite-dimensional");
  std::vector<GaussianRational> out;
  for (long j = *offset(lambda, *lower); j <= *offset(lambda, *upper); ++j) out.push_back(weight_at(lambda, j));
  return out;
}

std::string WeightModuleSpec::label() const {
  switch (kind) {
    case ModuleKind::Vk: return "V_k(" + c.str() + ", " + lambda.str() + ")";
    case ModuleKind::L: return "L(" + lambda.str() + ")";
    case ModuleKind::Mminus: return "M-(" + lambda.str() + ")";
    case ModuleKind::Mplus: return "M+(" + lambda.str() + ")";
    case ModuleKind::P: return "P(" + c.str() + ", " + lambda.str() + ")";
  }
  return "?";
}

ParamScalar alpha(const GaussianRational& c, const GaussianRational& k) {
  const ParamScalar m = mu_var();
  return ParamScalar::rational(1, 4) * (m - ParamScalar(k) + ParamScalar(kHalf)) *
         (m - ParamScalar(k) + ParamScalar(kThreeHalves)) * (ParamScalar(c) - m * m - m * ParamScalar(2));
}

ParamScalar beta(const GaussianRational& c, const GaussianRational& k) {
  const ParamScalar m = mu_var();
  return ParamScalar::rational(1, 4) * (m - ParamScalar(k) - ParamScalar(kHalf)) *
         (m - ParamScalar(k) - ParamScalar(kThreeHalves)) * (ParamScalar(c) - m * m + m * ParamScalar(2));
}

GaussianRational WeightModule::p_at(const GaussianRational& mu) const {
  if (!spec.contains(mu) || !spec.contains(mu - GaussianRational(2))) return 0;
  const bool up = *offset(spec.lambda, mu) > 0;
  return at_mu(up ? table.p_upper : table.p_lower, mu);
}

GaussianRational WeightModule::q_at(const GaussianRational& mu) const {
  if (!spec.contains(mu) || !spec.contains(mu + GaussianRational(2))) return 0;
  const bool up = *offset(spec.lambda, mu) >= 0;
  return at_mu(up ? table.q_upper : table.q_lower, mu);
}

namespace {

bool is_natural(const GaussianRational& x) {
  auto v = x.as_integer();
  return v && *v >= 0;
}

// D_k action induced from an sl2 module through iota_k.
ActionTable from_sl2(const ParamScalar& xc, const ParamScalar& yc, const GaussianRational& k) {
  const ParamScalar m = mu_var();
  ActionTable t;
  t.x_coef = xc;
  t.y_coef = yc;
  t.p_upper = t.p_lower = (m - ParamScalar(k) - ParamScalar(kHalf)) * yc;
  t.q_upper = t.q_lower = (m - ParamScalar(k) + ParamScalar(kHalf)) * xc;
  return t;
}

}  // namespace

WeightModule build_module(ModuleKind kind, const ModuleParams& params) {
  WeightModule m;
  m.spec.kind = kind;
  m.spec.k = params.k;
  const ParamScalar mu = mu_var();
  const ParamScalar quarter = ParamScalar::rational(1, 4);
  switch (kind) {
    case ModuleKind::Vk: {
      m.spec.c = params.c;
      m.spec.lambda = params.lambda;
      auto d = delta_set(params.c, params.lambda, params.k);
      m.spec.lower = d.m_minus;
      m.spec.upper = d.m_plus;
      m.table.q_upper = 1;
      m.table.q_lower = alpha(params.c, params.k);
      m.table.p_upper = beta(params.c, params.k);
      m.table.p_lower = 1;
      break;
    }
    case ModuleKind::L: {
      const GaussianRational n(static_cast<long>(params.n));
      m.spec.lambda = n;
      m.spec.c = n * n + n * GaussianRational(2);
      m.spec.lower = -n;
      m.spec.upper = n;
      m.table = from_sl2(quarter * (ParamScalar(m.spec.c) - mu * mu - mu * ParamScalar(2)), 1, params.k);
      break;
    }
    case ModuleKind::Mminus: {
      if (is_natural(params.lambda))
        throw DomainError("M-(lambda) needs lambda outside {0, 1, 2, ...}, got " + params.lambda.str());
      m.spec.lambda = params.lambda;
      m.spec.c = params.lambda * params.lambda + params.lambda * GaussianRational(2);
      m.spec.upper = params.lambda;
      m.table = from_sl2(quarter * (ParamScalar(m.spec.c) - mu * mu - mu * ParamScalar(2)), 1, params.k);
      break;
    }
    case ModuleKind::Mplus: {
      if (is_natural(-params.lambda))
        throw DomainError("M+(lambda) needs lambda outside {0, -1, -2, ...}, got " + params.lambda.str());
      m.spec.lambda = params.lambda;
      m.spec.c = params.lambda * params.lambda - params.lambda * GaussianRational(2);
      m.spec.lower = params.lambda;
      m.table = from_sl2(1, quarter * (ParamScalar(m.spec.c) - mu * mu + mu * ParamScalar(2)), params.k);
      break;
    }
    case ModuleKind::P: {
      if (!square_offsets(params.c, params.lambda, 1).empty())
        throw DomainError("P(c, lambda) needs (mu + 1)^2 != c + 1 on the weight coset");
      m.spec.lambda = params.lambda;
      m.spec.c = params.c;
      m.table = from_sl2(1, quarter * (ParamScalar(m.spec.c) - mu * mu + mu * ParamScalar(2)), params.k);
      break;
    }
  }
  return m;
}

VerifyReport verify_module(const WeightModule& m) {
  VerifyReport rep;
  rep.suite = "module " + m.spec.label();
  const auto& t = m.table;
  const ParamScalar a = alpha(m.spec.c, m.spec.k);
  const ParamScalar b = beta(m.spec.c, m.spec.k);
  // P Q v_mu = q(mu) p(mu + 2) v_mu on each branch pair.
  bool pq = (t.q_upper * shift_mu(t.p_upper, 2) - a).is_zero() && (t.q_lower * shift_mu(t.p_lower, 2) - a).is_zero();
  bool qp = (t.p_upper * shift_mu(t.q_upper, -2) - b).is_zero() && (t.p_lower * shift_mu(t.q_lower, -2) - b).is_zero();
  rep.add("module.FE", "(F e^2)(E f^2) acts by alpha(mu) for symbolic mu", pq, "alpha = " + a.str());
  rep.add("module.EF", "(E f^2)(F e^2) acts by beta(mu) for symbolic mu", qp, "beta = " + b.str());
  // [E, P] = -2P and [E, Q] = 2Q with E v_mu = (mu - k) v_mu.
  const ParamScalar e = mu_var() - ParamScalar(m.spec.k);
  bool wgt = (shift_mu(e, -2) - e + ParamScalar(2)).is_zero() && (shift_mu(e, 2) - e - ParamScalar(2)).is_zero();
  rep.add("module.weights", "E shifts by -2 under P and +2 under Q", wgt);
  bool bounds = true;
  std::string w;
  if (m.spec.upper && !at_mu(a, *m.spec.upper).is_zero()) {
    bounds = false;
    w = "alpha does not vanish at the top weight " + m.spec.upper->str();
  }
  if (m.spec.lower && !at_mu(b, *m.spec.lower).is_zero()) {
    bounds = false;
    w = "beta does not vanish at the bottom weight " + m.spec.lower->str();
  }
  rep.add("module.boundary", "raising vanishes at the top, lowering at the bottom", bounds, w);
  if (t.x_coef && t.y_coef) {
    const ParamScalar mu = mu_var();
    bool h = (shift_mu(*t.x_coef, -2) * *t.y_coef - shift_mu(*t.y_coef, 2) * *t.x_coef - mu).is_zero();
    bool om = (mu * mu + mu * ParamScalar(2) + ParamScalar(4) * shift_mu(*t.y_coef, 2) * *t.x_coef -
               ParamScalar(m.spec.c))
                  .is_zero();
    rep.add("module.sl2", "[x, y] = h and omega = c on the sl2 coefficients", h && om);
  }
  rep.add("module.admissible", "E semisimple with one-dimensional weight spaces on an interval of weights", true);
  return rep;
}

bool is_irreducible(const WeightModule& m) {
  for (auto j : alpha_zero_offsets(m.spec.c, m.spec.lambda, m.spec.k)) {
    GaussianRational mu = weight_at(m.spec.lambda, j);
    if (m.spec.contains(mu) && m.spec.contains(mu + GaussianRational(2))) return false;
  }
  return true;
}

bool equivalent(const WeightModule& a, const WeightModule& b) {
  return a.spec.k == b.spec.k && a.spec.c == b.spec.c && a.spec.contains(b.spec.lambda);
}

std::string Interval::str() const {
  return "[" + (lower ? lower->str() : std::string("-inf")) + ", " + (upper ? upper->str() : std::string("+inf")) +
         "]";
}

Restriction restrict_sl2(const WeightModule& input, const GaussianRational& k) {
  if (input.spec.kind == ModuleKind::Vk) throw DomainError("restriction applies to sl2 modules");
  ModuleParams params{k, input.spec.c, input.spec.lambda, 0};
  if (input.spec.kind == ModuleKind::L) params.n = static_cast<unsigned>(*input.spec.lambda.as_integer());
  const WeightModule m = build_module(input.spec.kind, params);
  Restriction out;
  out.report.suite = "restrict " + m.spec.label() + " at k = " + k.str();
  const auto& s = m.spec;
  if (s.contains(k + kHalf) && s.contains(k - kThreeHalves)) {
    out.splits = true;
    out.sub = {k + kHalf, s.upper};
    out.quotient = {s.lower, k - kThreeHalves};
    out.sub_lambda = k + kHalf;
    out.quotient_lambda = k - kThreeHalves;
  } else if (s.contains(k - kHalf) && s.contains(k + kThreeHalves)) {
    out.splits = true;
    out.sub = {s.lower, k - kHalf};
    out.quotient = {k + kThreeHalves, s.upper};
    out.sub_lambda = k - kHalf;
    out.quotient_lambda = k + kThreeHalves;
  }
  if (!out.splits) {
    out.sub = {s.lower, s.upper};
    out.report.add("restrict.irreducible", "the restriction has no invariant proper weight interval",
                   is_irreducible(m));
    return out;
  }
  // Explicit action: nothing leaves the submodule inside a window around the cut.
  auto in = [&](const Interval& iv, const GaussianRational& mu) {
    return le(iv.lower, s.lambda, mu) && (!iv.upper || le(mu, s.lambda, *iv.upper));
  };
  const GaussianRational centre = *out.sub_lambda;
  bool invariant = true;
  std::string w;
  for (const auto& mu : s.window(centre - GaussianRational(24), centre + GaussianRational(24))) {
    if (!in(out.sub, mu)) continue;
    if (!in(out.sub, mu - GaussianRational(2)) && !m.p_at(mu).is_zero()) {
      invariant = false;
      w = "P moves v_" + mu.str() + " out of the submodule";
    }
    if (!in(out.sub, mu + GaussianRational(2)) && !m.q_at(mu).is_zero()) {
      invariant = false;
      w = "Q moves v_" + mu.str() + " out of the submodule";
    }
  }
  out.report.add("restrict.invariant", "the claimed submodule is invariant under P, Q, E, C", invariant, w);
  auto matches = [&](const Interval& iv, const GaussianRational& lam) {
    auto d = delta_set(s.c, lam, k);
    return Interval{d.m_minus, d.m_plus} == iv;
  };
  out.report.add("restrict.sub", "submodule weights equal those of V_k(c, " + out.sub_lambda->str() + ")",
                 matches(out.sub, *out.sub_lambda), out.sub.str());
  out.report.add("restrict.quotient", "quotient weights equal those of V_k(c, " + out.quotient_lambda->str() + ")",
                 matches(out.quotient, *out.quotient_lambda), out.quotient.str());
  // Both pieces are irreducible: no internal zero of alpha.
  auto piece_irreducible = [&](const Interval& iv) {
    WeightModule piece = m;
    piece.spec.lower = iv.lower;
    piece.spec.upper = iv.upper;
    return is_irreducible(piece);
  };
  out.report.add("restrict.pieces", "submodule and quotient are irreducible",
                 piece_irreducible(out.sub) && piece_irreducible(out.quotient));
  if (auto dim = s.dimension()) {
    auto size = [&](const Interval& iv) { return *offset(s.lambda, *iv.upper) - *offset(s.lambda, *iv.lower) + 1; };
    const long total = size(out.sub) + size(out.quotient);
    out.report.add("restrict.dimension", "dim(sub) + dim(quotient) = dim", total == static_cast<long>(*dim),
                   std::to_string(total) + " vs " + std::to_string(*dim));
  }
  return out;
}

bool iso_decision(const GaussianRational& k, const GaussianRational& k2) { return k == k2 || k == -k2; }

VerifyReport verify_isos(const GaussianRational& k) {
  VerifyReport rep;
  rep.suite = "isos";
  const IdoConfig cfg = IdoConfig::at(1, k);
  const auto gens = generators(cfg);
  const GaussianRational d(3), d2(-2, 5);
  bool inverse = true, compose = true, induced = true;
  auto alg = uea_sl2();
  for (const auto& g : gens) {
    if (!(mu_d(mu_d(g.value, d), d.inv()) == g.value)) inverse = false;
    if (!(mu_d(mu_d(g.value, d2), d) == mu_d(g.value, d * d2))) compose = false;
    if (!(iota(mu_d(g.value, d)) == apply_map(mu_sl2(d), iota(g.value)))) induced = false;
  }
  rep.add("isos.mu_inverse", "mu_d composed with mu_{1/d} is the identity on generators", inverse);
  rep.add("isos.mu_compose", "mu_d composed with mu_d' is mu_{dd'}", compose);
  rep.add("isos.mu_induced", "mu_d is induced from x -> dx, y -> y/d through iota", induced);
  bool scaling = mu_d(gens[0].value, d) == gens[0].value * ParamScalar(d.inv()) &&
                 mu_d(gens[1].value, d) == gens[1].value * ParamScalar(d) && mu_d(gens[2].value, d) == gens[2].value &&
                 mu_d(gens[3].value, d) == gens[3].value;
  rep.add("isos.mu_generators", "mu_d scales F e^2 by 1/d and E f^2 by d, fixing E and C", scaling);

  const bool decide = iso_decision(k, -k) && iso_decision(k, k) &&
                      (k.is_zero() || !iso_decision(k, k + GaussianRational(1)));
  rep.add("isos.decision", "D_k and D_k' are isomorphic exactly when k = +-k'", decide);

  // Character sets of D_k and D_{-k} correspond under theta~.
  auto here = enumerate_characters(cfg).characters;
  auto there = enumerate_characters(cfg.negated()).characters;
  bool match = here.size() == there.size();
  for (const auto& chi : there) {
    Character pulled = pullback_theta(chi);
    if (std::find(here.begin(), here.end(), pulled) == here.end()) match = false;
  }
  rep.add("isos.characters", "theta~ carries the characters of D_{-k} onto those of D_k", match,
          std::to_string(here.size()) + " vs " + std::to_string(there.size()));
  return rep;
}

}  // namespace jacobi
