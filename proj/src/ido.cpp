#include "ido_engine.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

namespace jacobi {

// ---------------------------------------------------------------------------
// Config and monomials

IdoConfig IdoConfig::symbolic(unsigned N) {
  if (N == 0) throw DomainError("rank N must be positive");
  return IdoConfig{N, ParamScalar::param(Param::k)};
}

IdoConfig IdoConfig::at(unsigned N, const GaussianRational& k) {
  if (N == 0) throw DomainError("rank N must be positive");
  return IdoConfig{N, ParamScalar(k)};
}

std::string IdoConfig::k_label() const {
  if (k == ParamScalar::param(Param::k)) return "symbolic";
  return k.str();
}

IdoConfig IdoConfig::negated() const { return IdoConfig{N, -k}; }

IdoMonomial IdoMonomial::one(unsigned N) {
  IdoMonomial m;
  m.If.assign(N, 0);
  m.Ie.assign(N, 0);
  return m;
}

unsigned IdoMonomial::size_f() const { return std::accumulate(If.begin(), If.end(), 0U); }
unsigned IdoMonomial::size_e() const { return std::accumulate(Ie.begin(), Ie.end(), 0U); }
unsigned IdoMonomial::degree() const { return 2U * (iF + iE + iC) + size_f() + size_e(); }
int IdoMonomial::balance() const {
  return 2 * iF + static_cast<int>(size_f()) - 2 * iE - static_cast<int>(size_e());
}
bool IdoMonomial::is_one() const { return iF == 0 && iE == 0 && iC == 0 && size_f() == 0 && size_e() == 0; }

// ---------------------------------------------------------------------------
// Engine

IdoEngine::IdoEngine(IdoConfig cfg)
    : cfg_(std::move(cfg)), kN2_(cfg_.k + ParamScalar::rational(cfg_.N, 2)), half_(ParamScalar::rational(1, 2)) {}

void IdoEngine::add(Terms& out, const IdoMonomial& m, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

void IdoEngine::add_all(Terms& out, const Terms& v, const ParamScalar& scale) {
  if (scale.is_zero()) return;
  for (const auto& [m, c] : v) add(out, m, scale.is_one() ? c : c * scale);
}

// H_nu F^a E^b f^I e^J [1] with H_nu pushed right: shift by 2b - 2a, then
// H_nu [1] = k + N/2 + sum_r f_r e_r and e^J f_r = f_r e^J + J_r e^(J - 1_r).
void IdoEngine::weyl_H(const IdoMonomial& m, const ParamScalar& shift, const ParamScalar& s, Terms& out) const {
  ParamScalar diag = kN2_ + ParamScalar(static_cast<long>(m.size_e())) + shift;
  add(out, m, s * diag);
  for (unsigned r = 0; r < cfg_.N; ++r) {
    IdoMonomial n = m;
    ++n.If[r];
    ++n.Ie[r];
    add(out, n, s);
  }
}

void IdoEngine::act_mono(Letter L, unsigned r, const IdoMonomial& m, const ParamScalar& s, Terms& out) const {
  switch (L) {
    case Letter::F: {
      IdoMonomial n = m;
      ++n.iF;
      add(out, n, s);
      return;
    }
    case Letter::f: {
      IdoMonomial n = m;
      ++n.If.at(r - 1);
      add(out, n, s);
      return;
    }
    case Letter::e: {
      IdoMonomial n = m;
      ++n.Ie.at(r - 1);
      add(out, n, s);
      if (m.If.at(r - 1) > 0) {
        IdoMonomial d = m;
        --d.If[r - 1];
        add(out, d, s * ParamScalar(static_cast<long>(m.If[r - 1])));
      }
      return;
    }
    case Letter::E: {
      IdoMonomial n = m;
      ++n.iE;
      add(out, n, s);
      if (m.iF > 0) {
        // [E, F^a] = a F^(a-1) (H - a + 1), and H E^b = E^b (H + 2b).
        const long a = m.iF;
        const long b = m.iE;
        IdoMonomial d = m;
        --d.iF;
        weyl_H(d, ParamScalar(2 * b - a + 1), s * ParamScalar(a), out);
      }
      return;
    }
    case Letter::H: {
      weyl_H(m, ParamScalar(2L * m.iE - 2L * m.iF), s, out);
      return;
    }
    case Letter::C: {
      Terms one{{m, 1}};
      Terms h1 = act(Letter::H, 0, one);
      Terms h2 = act(Letter::H, 0, h1);
      Terms fe = act(Letter::F, 0, act(Letter::E, 0, one));
      add_all(out, h2, s);
      add_all(out, h1, s * ParamScalar(2));
      add_all(out, fe, s * ParamScalar(4));
      return;
    }
    case Letter::tF: {
      act_mono(Letter::F, 0, m, s, out);
      for (unsigned q = 1; q <= cfg_.N; ++q) {
        Terms t = act(Letter::f, q, act(Letter::f, q, Terms{{m, 1}}));
        add_all(out, t, s * half_);
      }
      return;
    }
    case Letter::tE: {
      act_mono(Letter::E, 0, m, s, out);
      for (unsigned q = 1; q <= cfg_.N; ++q) {
        Terms t = act(Letter::e, q, act(Letter::e, q, Terms{{m, 1}}));
        add_all(out, t, -s * half_);
      }
      return;
    }
    case Letter::tH: {
      act_mono(Letter::H, 0, m, s, out);
      for (unsigned q = 1; q <= cfg_.N; ++q) {
        Terms t = act(Letter::f, q, act(Letter::e, q, Terms{{m, 1}}));
        add_all(out, t, -s);
      }
      add(out, m, -s * ParamScalar::rational(cfg_.N, 2));
      return;
    }
  }
}

IdoEngine::Terms IdoEngine::act(Letter L, unsigned r, const Terms& v) const {
  Terms out;
  for (const auto& [m, c] : v) act_mono(L, r, m, c, out);
  return out;
}

namespace {

// Leftmost letter of the word F^a E^b f^I e^J, and the remaining word.
std::pair<std::pair<Letter, unsigned>, IdoMonomial> strip_left(const IdoMonomial& x) {
  IdoMonomial rest = x;
  if (x.iF > 0) {
    --rest.iF;
    return {{Letter::F, 0}, rest};
  }
  if (x.iE > 0) {
    --rest.iE;
    return {{Letter::E, 0}, rest};
  }
  for (unsigned r = 0; r < x.If.size(); ++r)
    if (x.If[r] > 0) {
      --rest.If[r];
      return {{Letter::f, r + 1}, rest};
    }
  for (unsigned r = 0; r < x.Ie.size(); ++r)
    if (x.Ie[r] > 0) {
      --rest.Ie[r];
      return {{Letter::e, r + 1}, rest};
    }
  throw ConsistencyError("strip_left on the empty word");
}

}  // namespace

IdoEngine::Terms IdoEngine::compute_mono_times_mono(const IdoMonomial& x, const IdoMonomial& y) const {
  if (x.iC != 0 || y.iC != 0) throw ConsistencyError("basis-A product received a basis-B monomial");
  if (x.is_one()) return Terms{{y, 1}};
  auto [letter, rest] = strip_left(x);
  Terms inner = mono_times_mono(rest, y);
  return act(letter.first, letter.second, inner);
}

const IdoEngine::Terms& IdoEngine::mono_times_mono(const IdoMonomial& x, const IdoMonomial& y) const {
  auto key = std::make_pair(x, y);
  {
    std::shared_lock lock(mu_);
    auto it = prod_memo_.find(key);
    if (it != prod_memo_.end()) return it->second;
  }
  Terms value = compute_mono_times_mono(x, y);
  std::unique_lock lock(mu_);
  return prod_memo_.try_emplace(std::move(key), std::move(value)).first->second;
}

IdoEngine::Terms IdoEngine::multiply_a(const Terms& x, const Terms& y) const {
  Terms out;
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) {
      ParamScalar c = cx * cy;
      add_all(out, mono_times_mono(mx, my), c);
    }
  }
  return out;
}

const IdoEngine::Terms& IdoEngine::c_power(unsigned c) const {
  {
    std::shared_lock lock(mu_);
    if (c < c_powers_.size()) return *c_powers_[c];
  }
  Terms value;
  if (c == 0) {
    value.emplace(IdoMonomial::one(cfg_.N), 1);
  } else {
    value = act(Letter::C, 0, c_power(c - 1));
  }
  std::unique_lock lock(mu_);
  if (c < c_powers_.size()) return *c_powers_[c];
  if (c != c_powers_.size()) throw ConsistencyError("C powers computed out of order");
  c_powers_.push_back(std::make_unique<Terms>(std::move(value)));
  return *c_powers_.back();
}

const IdoEngine::Terms& IdoEngine::b_to_a(const IdoMonomial& m) const {
  {
    std::shared_lock lock(mu_);
    auto it = b2a_memo_.find(m);
    if (it != b2a_memo_.end()) return it->second;
  }
  IdoMonomial word = m;
  word.iC = 0;
  Terms value;
  const Terms& cp = c_power(m.iC);
  for (const auto& [n, c] : cp) add_all(value, mono_times_mono(word, n), c);
  std::unique_lock lock(mu_);
  return b2a_memo_.try_emplace(m, std::move(value)).first->second;
}

// F^a E^b W = (1/4) C F^(a-1) E^(b-1) W - (1/4) F^(a-1) E^(b-1) q(H + 2(b-1)) W,
// q(h) = h^2 + 2h, with H acting on W = f^I e^J [1] by the Weyl rule.
IdoEngine::Terms IdoEngine::compute_a_to_b(const IdoMonomial& m) const {
  Terms out;
  if (m.iC != 0) throw ConsistencyError("a_to_b expects a basis-A monomial");
  if (m.iF == 0 || m.iE == 0) {
    out.emplace(m, 1);
    return out;
  }
  const ParamScalar quarter = ParamScalar::rational(1, 4);
  IdoMonomial lower = m;
  --lower.iF;
  --lower.iE;
  for (const auto& [n, c] : a_to_b(lower)) {
    IdoMonomial shifted = n;
    ++shifted.iC;
    add(out, shifted, c * quarter);
  }
  IdoMonomial w = IdoMonomial::one(cfg_.N);
  w.If = m.If;
  w.Ie = m.Ie;
  ParamScalar shift(2L * (m.iE - 1));
  Terms h1;
  weyl_H(w, shift, 1, h1);
  Terms q;
  for (const auto& [n, c] : h1) weyl_H(n, shift, c, q);
  add_all(q, h1, ParamScalar(2));
  for (const auto& [n, c] : q) {
    IdoMonomial a = n;
    a.iF = lower.iF;
    a.iE = lower.iE;
    add_all(out, a_to_b(a), -c * quarter);
  }
  return out;
}

const IdoEngine::Terms& IdoEngine::a_to_b(const IdoMonomial& m) const {
  {
    std::shared_lock lock(mu_);
    auto it = a2b_memo_.find(m);
    if (it != a2b_memo_.end()) return it->second;
  }
  Terms value = compute_a_to_b(m);
  std::unique_lock lock(mu_);
  return a2b_memo_.try_emplace(m, std::move(value)).first->second;
}

IdoEngine::Terms IdoEngine::to_a(const Terms& b) const {
  Terms out;
  for (const auto& [m, c] : b) add_all(out, b_to_a(m), c);
  return out;
}

IdoEngine::Terms IdoEngine::to_b(const Terms& a) const {
  Terms out;
  for (const auto& [m, c] : a) add_all(out, a_to_b(m), c);
  return out;
}

const IdoEngine::Terms& IdoEngine::tilde_word(const IdoMonomial& m) const {
  {
    std::shared_lock lock(mu_);
    auto it = tilde_memo_.find(m);
    if (it != tilde_memo_.end()) return it->second;
  }
  Terms value;
  if (m.is_one()) {
    value.emplace(m, 1);
  } else {
    // Strip the leftmost tilde letter; f~ = f and e~ = e on the module.
    auto [letter, rest] = strip_left(m);
    Letter L = letter.first == Letter::F ? Letter::tF : letter.first == Letter::E ? Letter::tE : letter.first;
    value = act(L, letter.second, tilde_word(rest));
  }
  std::unique_lock lock(mu_);
  return tilde_memo_.try_emplace(m, std::move(value)).first->second;
}

std::shared_ptr<IdoEngine> engine_for(const IdoConfig& cfg) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, std::string>, std::shared_ptr<IdoEngine>> cache;
  auto key = std::make_pair(cfg.N, cfg.k.str());
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto e = std::make_shared<IdoEngine>(cfg);
  cache.emplace(key, e);
  return e;
}

// ---------------------------------------------------------------------------
// Elements

IdoElement::IdoElement(IdoConfig cfg, IdoBasis basis, TermMap terms) : cfg_(std::move(cfg)), basis_(basis) {
  for (auto& [m, c] : terms) {
    if (m.If.size() != cfg_.N || m.Ie.size() != cfg_.N) throw DomainError("monomial rank does not match N");
    if (basis_ == IdoBasis::A && m.iC != 0) throw DomainError("basis-A monomials carry no C power");
    if (basis_ == IdoBasis::B && m.iF > 0 && m.iE > 0) throw DomainError("basis-B monomials have iF * iE = 0");
    add_term(m, c);
  }
}

IdoElement IdoElement::scalar(const IdoConfig& cfg, const ParamScalar& s, IdoBasis basis) {
  IdoElement e(cfg, basis);
  e.add_term(IdoMonomial::one(cfg.N), s);
  return e;
}

IdoElement IdoElement::monomial(const IdoConfig& cfg, IdoBasis basis, const IdoMonomial& m, const ParamScalar& c) {
  return IdoElement(cfg, basis, TermMap{{m, c}});
}

void IdoElement::add_term(const IdoMonomial& m, const ParamScalar& c) { IdoEngine::add(terms_, m, c); }

ParamScalar IdoElement::coefficient(const IdoMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamScalar() : it->second;
}

unsigned IdoElement::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

IdoElement IdoElement::to(IdoBasis target) const {
  if (target == basis_) return *this;
  auto eng = engine_for(cfg_);
  IdoElement out(cfg_, target);
  out.terms_ = target == IdoBasis::A ? eng->to_a(terms_) : eng->to_b(terms_);
  return out;
}

namespace {
void same_config(const IdoElement& a, const IdoElement& b) {
  if (!(a.config() == b.config())) throw DomainError("elements belong to different D_k configurations");
}
}  // namespace

IdoElement IdoElement::operator-() const {
  IdoElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

IdoElement& IdoElement::operator+=(const IdoElement& o) {
  same_config(*this, o);
  const IdoElement& rhs = o.basis_ == basis_ ? o : o.to(basis_);
  for (const auto& [m, c] : (o.basis_ == basis_ ? o.terms_ : rhs.terms_)) add_term(m, c);
  return *this;
}

IdoElement& IdoElement::operator-=(const IdoElement& o) { return *this += -o; }

IdoElement& IdoElement::operator*=(const ParamScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

IdoElement operator*(const IdoElement& a, const IdoElement& b) {
  same_config(a, b);
  auto eng = engine_for(a.cfg_);
  IdoElement aa = a.to(IdoBasis::A);
  IdoElement bb = b.to(IdoBasis::A);
  IdoElement out(a.cfg_, IdoBasis::A);
  out.terms_ = eng->multiply_a(aa.terms_, bb.terms_);
  return out.to(a.basis_);
}

bool operator==(const IdoElement& a, const IdoElement& b) {
  if (!(a.cfg_ == b.cfg_)) return false;
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return a.to(IdoBasis::A).terms_ == b.to(IdoBasis::A).terms_;
}

IdoElement IdoElement::pow(unsigned e) const {
  IdoElement r = scalar(cfg_, 1, basis_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string IdoElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    auto put = [&mono](const std::string& name, unsigned e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    put("F_nu", m.iF);
    put("E_nu", m.iE);
    for (unsigned r = 0; r < m.If.size(); ++r) put("tf" + std::to_string(r + 1), m.If[r]);
    for (unsigned r = 0; r < m.Ie.size(); ++r) put("te" + std::to_string(r + 1), m.Ie[r]);
    put("C", m.iC);
    std::string coef = c.str();
    bool negative = false;
    if (c.is_constant() && c.constant_value()->is_real() && sgn(c.constant_value()->re()) < 0) {
      negative = true;
      coef = (-c).str();
    }
    bool simple = c.is_constant() && c.constant_value()->is_real();
    if (!simple && (coef.find_first_of("+-/ ") != std::string::npos)) coef = "(" + coef + ")";
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (mono.empty())
      os << coef;
    else if (coef == "1")
      os << mono;
    else
      os << coef << "*" << mono;
  }
  return os.str();
}

IdoElement commutator(const IdoElement& a, const IdoElement& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Named elements

namespace {

void check_index(const IdoConfig& cfg, unsigned r) {
  if (r < 1 || r > cfg.N) throw DomainError("index " + std::to_string(r) + " out of range 1.." + std::to_string(cfg.N));
}

}  // namespace

IdoElement ido_P(const IdoConfig& cfg, unsigned r, unsigned s) {
  check_index(cfg, r);
  check_index(cfg, s);
  IdoMonomial m = IdoMonomial::one(cfg.N);
  m.iF = 1;
  ++m.Ie[r - 1];
  ++m.Ie[s - 1];
  return IdoElement::monomial(cfg, IdoBasis::A, m);
}

IdoElement ido_Q(const IdoConfig& cfg, unsigned r, unsigned s) {
  check_index(cfg, r);
  check_index(cfg, s);
  IdoMonomial m = IdoMonomial::one(cfg.N);
  m.iE = 1;
  ++m.If[r - 1];
  ++m.If[s - 1];
  return IdoElement::monomial(cfg, IdoBasis::A, m);
}

IdoElement ido_Ers(const IdoConfig& cfg, unsigned r, unsigned s) {
  check_index(cfg, r);
  check_index(cfg, s);
  IdoMonomial m = IdoMonomial::one(cfg.N);
  ++m.If[r - 1];
  ++m.Ie[s - 1];
  IdoElement e = IdoElement::monomial(cfg, IdoBasis::A, m);
  if (r == s) e += IdoElement::scalar(cfg, ParamScalar::rational(1, 2));
  return e;
}

IdoElement ido_Etotal(const IdoConfig& cfg) {
  IdoElement e(cfg, IdoBasis::A);
  for (unsigned r = 1; r <= cfg.N; ++r) e += ido_Ers(cfg, r, r);
  return e;
}

IdoElement ido_FE(const IdoConfig& cfg) {
  IdoMonomial m = IdoMonomial::one(cfg.N);
  m.iF = 1;
  m.iE = 1;
  return IdoElement::monomial(cfg, IdoBasis::A, m);
}

IdoElement casimir(const IdoConfig& cfg) {
  auto eng = engine_for(cfg);
  return IdoElement(cfg, IdoBasis::A, eng->c_power(1));
}

IdoElement ido_word(const IdoConfig& cfg, const std::vector<std::string>& letters) {
  auto eng = engine_for(cfg);
  IdoEngine::Terms v{{IdoMonomial::one(cfg.N), 1}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const std::string& s = *it;
    Letter L;
    unsigned r = 0;
    if (s == "F") {
      L = Letter::F;
    } else if (s == "E") {
      L = Letter::E;
    } else if (s == "H") {
      L = Letter::H;
    } else if (s == "C") {
      L = Letter::C;
    } else if (s == "tF") {
      L = Letter::tF;
    } else if (s == "tE") {
      L = Letter::tE;
    } else if (s == "tH") {
      L = Letter::tH;
    } else if (s.size() >= 2 && (s[0] == 'f' || s[0] == 'e')) {
      L = s[0] == 'f' ? Letter::f : Letter::e;
      r = static_cast<unsigned>(std::stoul(s.substr(1)));
      check_index(cfg, r);
    } else {
      throw DomainError("unknown letter '" + s + "'");
    }
    v = eng->act(L, r, v);
  }
  return IdoElement(cfg, IdoBasis::A, std::move(v));
}

}  // namespace jacobi
