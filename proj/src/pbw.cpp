#include "jacobi/pbw.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

namespace jacobi {

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : m) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

UeaAlgebra::UeaAlgebra(PresentationPtr p, LocalizationConfig loc) : pres_(std::move(p)), loc_(std::move(loc)) {
  central_.resize(pres_->size());
  for (std::size_t i = 0; i < pres_->size(); ++i) central_[i] = pres_->is_central(i);
  for (const auto& [g, w] : loc_.inverse_pairs) {
    if (g >= size() || w >= size()) throw DomainError("localization index out of range");
    if (!central_[g] || !central_[w]) throw DomainError("only central generators can be inverted");
  }
}

void UeaAlgebra::cancel(Monomial& m) const {
  for (const auto& [g, w] : loc_.inverse_pairs) {
    auto t = std::min(m[g], m[w]);
    m[g] = static_cast<std::uint16_t>(m[g] - t);
    m[w] = static_cast<std::uint16_t>(m[w] - t);
  }
}

std::size_t UeaAlgebra::memo_size() const {
  std::shared_lock lock(memo_mu_);
  return memo_.size();
}

const UeaAlgebra::Terms& UeaAlgebra::left_mul_gen(std::size_t j, const Monomial& m) const {
  Monomial key = m;
  key.push_back(static_cast<std::uint16_t>(j));
  {
    std::shared_lock lock(memo_mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Terms value = compute_left_mul(j, m);
  std::unique_lock lock(memo_mu_);
  auto [it, inserted] = memo_.try_emplace(std::move(key), std::move(value));
  return it->second;
}

UeaAlgebra::Terms UeaAlgebra::compute_left_mul(std::size_t j, const Monomial& m) const {
  if (j >= size()) throw DomainError("generator index out of range");
  std::size_t p = 0;
  while (p < m.size() && m[p] == 0) ++p;
  Terms out;
  if (central_[j] || j <= p) {
    Monomial n = m;
    ++n[j];
    cancel(n);
    out.emplace(std::move(n), 1);
    return out;
  }
  // g_j g_p m' = g_p (g_j m') + [g_j, g_p] m'
  Monomial rest = m;
  --rest[p];
  auto accumulate = [&out](const Terms& t, const GaussianRational& scale) {
    for (const auto& [n, c] : t) {
      auto [it, inserted] = out.try_emplace(n, c * scale);
      if (!inserted) it->second += c * scale;
    }
  };
  Terms inner = left_mul_gen(j, rest);
  for (const auto& [n, c] : inner) accumulate(left_mul_gen(p, n), c);
  for (const auto& [q, c] : pres_->bracket_gen(j, p)) accumulate(left_mul_gen(q, rest), c);
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

UeaAlgebra::Terms UeaAlgebra::mul_monomials(const Monomial& a, const Monomial& b) const {
  Terms cur{{b, 1}};
  for (std::size_t j = a.size(); j-- > 0;) {
    for (unsigned rep = 0; rep < a[j]; ++rep) {
      Terms next;
      for (const auto& [n, c] : cur) {
        for (const auto& [n2, c2] : left_mul_gen(j, n)) {
          auto [it, inserted] = next.try_emplace(n2, c * c2);
          if (!inserted) it->second += c * c2;
        }
      }
      for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
      cur = std::move(next);
    }
  }
  return cur;
}

// ---------------------------------------------------------------------------

AlgebraPtr uea_of(const PresentationPtr& p) {
  static std::mutex mu;
  static std::map<const LiePresentation*, AlgebraPtr> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(p.get());
  if (it != cache.end()) return it->second;
  auto a = std::make_shared<const UeaAlgebra>(p);
  cache.emplace(p.get(), a);
  return a;
}

AlgebraPtr uea_jacobi(unsigned N, BasisKind basis) { return uea_of(make_jacobi(N, basis)); }
AlgebraPtr uea_sl2() { return uea_of(make_sl2()); }

AlgebraPtr uea_localized_rank1(BasisKind basis) {
  static std::mutex mu;
  static std::map<bool, AlgebraPtr> cache;
  std::lock_guard lock(mu);
  bool tilde = basis == BasisKind::tilde;
  auto it = cache.find(tilde);
  if (it != cache.end()) return it->second;
  auto base = make_jacobi(1, basis);
  auto p = base->with_central(GeneratorSymbol::make(GenKind::W));
  LocalizationConfig loc;
  loc.inverse_pairs.emplace_back(p->index_of(GeneratorSymbol::make(GenKind::Z, tilde, 1, 1)),
                                 p->index_of(GeneratorSymbol::make(GenKind::W)));
  auto a = std::make_shared<const UeaAlgebra>(p, loc);
  cache.emplace(tilde, a);
  return a;
}

// ---------------------------------------------------------------------------

UeaElement::UeaElement(AlgebraPtr alg, TermMap terms) : alg_(std::move(alg)) {
  for (auto& [m, c] : terms) {
    if (m.size() != alg_->size()) throw DomainError("monomial length does not match the presentation");
    if (!c.is_zero()) terms_.emplace(m, c);
  }
}

UeaElement UeaElement::scalar(AlgebraPtr alg, const ParamScalar& s) {
  UeaElement e(alg);
  if (!s.is_zero()) e.terms_.emplace(Monomial(alg->size(), 0), s);
  return e;
}

UeaElement UeaElement::generator(AlgebraPtr alg, std::size_t index) {
  if (index >= alg->size()) throw DomainError("generator index out of range");
  Monomial m(alg->size(), 0);
  m[index] = 1;
  UeaElement e(alg);
  e.terms_.emplace(std::move(m), 1);
  return e;
}

UeaElement UeaElement::generator(AlgebraPtr alg, const std::string& name) {
  auto i = alg->presentation()->find_name(name);
  if (!i) throw DomainError("unknown generator '" + name + "'");
  return generator(std::move(alg), *i);
}

UeaElement UeaElement::from_lincomb(AlgebraPtr alg, const LinComb& v) {
  UeaElement e(alg);
  for (const auto& [i, c] : v) e += generator(alg, i) * ParamScalar(c);
  return e;
}

UeaElement UeaElement::word(AlgebraPtr alg, const std::vector<std::size_t>& letters) {
  UeaElement e = scalar(alg, 1);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) e = generator(alg, *it) * e;
  return e;
}

ParamScalar UeaElement::constant_term() const { return coefficient(Monomial(alg_->size(), 0)); }

ParamScalar UeaElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamScalar() : it->second;
}

bool UeaElement::involves(std::size_t generator) const {
  for (const auto& [m, c] : terms_)
    if (m.at(generator) > 0) return true;
  return false;
}

unsigned UeaElement::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0U));
  return d;
}

void UeaElement::add_term(const Monomial& m, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UeaElement UeaElement::operator-() const {
  UeaElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

namespace {
void same_algebra(const UeaElement& a, const UeaElement& b) {
  if (a.algebra() != b.algebra()) throw DomainError("elements live in different enveloping algebras");
}
}  // namespace

UeaElement& UeaElement::operator+=(const UeaElement& o) {
  same_algebra(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UeaElement& UeaElement::operator-=(const UeaElement& o) {
  same_algebra(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UeaElement& UeaElement::operator*=(const ParamScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

UeaElement operator*(const UeaElement& a, const UeaElement& b) {
  same_algebra(a, b);
  UeaElement out(a.alg_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ParamScalar cab = ca * cb;
      for (const auto& [n, c] : a.alg_->mul_monomials(ma, mb)) out.add_term(n, cab * ParamScalar(c));
    }
  }
  return out;
}

bool operator==(const UeaElement& a, const UeaElement& b) {
  return a.alg_ == b.alg_ && a.terms_ == b.terms_;
}

UeaElement UeaElement::pow(unsigned e) const {
  UeaElement r = scalar(alg_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string UeaElement::str() const {
  if (terms_.empty()) return "0";
  const auto& gens = alg_->presentation()->generators();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += gens[i].name();
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string coef = c.str();
    bool negative = false;
    if (c.is_constant() && c.constant_value()->is_real() && sgn(c.constant_value()->re()) < 0) {
      negative = true;
      coef = (-c).str();
    }
    bool compound = coef.find_first_of("+-/ ") != std::string::npos && !(c.is_constant() && c.constant_value()->is_real());
    if (compound) coef = "(" + coef + ")";
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (mono.empty()) {
      os << coef;
    } else if (coef == "1") {
      os << mono;
    } else {
      os << coef << "*" << mono;
    }
  }
  return os.str();
}

UeaElement commutator(const UeaElement& a, const UeaElement& b) { return a * b - b * a; }

UeaElement ad(std::size_t j, const UeaElement& a) {
  return commutator(UeaElement::generator(a.algebra(), j), a);
}

UeaElement apply_map(const LinearLieMap& m, const UeaElement& e, const AlgebraPtr& target) {
  if (e.algebra()->presentation()->label() != m.domain()->label())
    throw DomainError("map domain does not match the element's presentation");
  if (target->presentation()->label() != m.codomain()->label())
    throw DomainError("map codomain does not match the target algebra");
  std::vector<UeaElement> images;
  images.reserve(m.domain()->size());
  for (std::size_t i = 0; i < m.domain()->size(); ++i) images.push_back(UeaElement::from_lincomb(target, m.image(i)));
  UeaElement out(target);
  for (const auto& [mono, c] : e.terms()) {
    UeaElement t = UeaElement::scalar(target, c);
    for (std::size_t i = 0; i < mono.size(); ++i)
      for (unsigned r = 0; r < mono[i]; ++r) t = t * images[i];
    out += t;
  }
  return out;
}

UeaElement apply_map(const LinearLieMap& m, const UeaElement& e) { return apply_map(m, e, e.algebra()); }

namespace {

std::string tname(const AlgebraPtr& alg, const std::string& base) {
  return alg->presentation()->kind() == BasisKind::tilde ? "t" + base : base;
}

UeaElement gen(const AlgebraPtr& alg, const std::string& base) {
  return UeaElement::generator(alg, tname(alg, base));
}

}  // namespace

UeaElement casimir_sl2(const AlgebraPtr& alg) {
  if (alg->presentation()->kind() == BasisKind::sl2) {
    auto h = UeaElement::generator(alg, "h");
    auto x = UeaElement::generator(alg, "x");
    auto y = UeaElement::generator(alg, "y");
    return h * h + h * ParamScalar(2) + y * x * ParamScalar(4);
  }
  auto H = gen(alg, "H");
  auto E = gen(alg, "E");
  auto F = gen(alg, "F");
  return H * H + H * ParamScalar(2) + F * E * ParamScalar(4);
}

UeaElement nu_rank1(const AlgebraPtr& loc, GenKind x) {
  if (!loc->localized() || loc->presentation()->rank() != 1)
    throw UnsupportedError("nu is implemented for the localized rank-1 algebra only");
  auto e = gen(loc, "e1");
  auto f = gen(loc, "f1");
  auto W = UeaElement::generator(loc, "W");
  const ParamScalar quarter = ParamScalar::rational(1, 4);
  switch (x) {
    case GenKind::H: return gen(loc, "H") - (f * W * e + e * W * f) * quarter;
    case GenKind::E: return gen(loc, "E") - e * W * e * quarter;
    case GenKind::F: return gen(loc, "F") + f * W * f * quarter;
    default: throw DomainError("nu is defined on E, F, H");
  }
}

UeaElement nu_extend(const UeaElement& sl2_part) {
  const auto& alg = sl2_part.algebra();
  const auto& p = *alg->presentation();
  std::map<std::size_t, UeaElement> images;
  for (auto k : {GenKind::E, GenKind::F, GenKind::H}) {
    bool tilde = p.kind() == BasisKind::tilde;
    images.emplace(p.index_of(GeneratorSymbol::make(k, tilde)), nu_rank1(alg, k));
  }
  UeaElement out(alg);
  for (const auto& [mono, c] : sl2_part.terms()) {
    UeaElement t = UeaElement::scalar(alg, c);
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      auto it = images.find(i);
      if (it == images.end()) throw DomainError("nu_extend expects an element of U(sl2)");
      for (unsigned r = 0; r < mono[i]; ++r) t = t * it->second;
    }
    out += t;
  }
  return out;
}

UeaElement omega_rank1(const AlgebraPtr& loc) {
  auto omega = nu_extend(casimir_sl2(loc));
  auto Z = gen(loc, "Z11");
  auto result = Z * (omega - UeaElement::scalar(loc, ParamScalar::rational(5, 4)));
  auto w = loc->presentation()->index_of(GeneratorSymbol::make(GenKind::W));
  if (result.involves(w)) throw ConsistencyError("W survives in Z11 (nu(Omega) - 5/4)");
  return result;
}

UeaElement drop_localization(const UeaElement& e, const AlgebraPtr& target) {
  const std::size_t n = target->size();
  UeaElement::TermMap terms;
  for (const auto& [m, c] : e.terms()) {
    for (std::size_t i = n; i < m.size(); ++i)
      if (m[i] != 0) throw DomainError("element still involves the localization symbol");
    terms.emplace(Monomial(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(n)), c);
  }
  return UeaElement(target, std::move(terms));
}

}  // namespace jacobi
