#include "jacobi/coeffs.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace jacobi {

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational::GaussianRational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s.empty()) throw DomainError("empty rational literal");
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') pos = 1;
  bool seen_slash = false;
  bool digits_before = false;
  bool digits_after = false;
  for (std::size_t j = pos; j < s.size(); ++j) {
    if (s[j] == '/') {
      if (seen_slash) throw DomainError("malformed rational '" + s + "'");
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[j]))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else {
      throw DomainError("malformed rational '" + s + "'");
    }
  }
  if (!digits_before || (seen_slash && !digits_after)) throw DomainError("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw DivisionByZero();
  q.canonicalize();
  return GaussianRational(q);
}

bool GaussianRational::is_integer() const { return is_real() && re_.get_den() == 1; }

std::optional<long> GaussianRational::as_integer() const {
  if (!is_integer() || !re_.get_num().fits_slong_p()) return std::nullopt;
  return re_.get_num().get_si();
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inv();
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  mpq_class a = abs(im_);
  if (a == 1) {
    imag = "i";
  } else if (a.get_den() == 1) {
    imag = a.get_str() + "i";
  } else {
    imag = "(" + a.get_str() + ")i";
  }
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + imag;
}

// ---------------------------------------------------------------------------
// Parameters

std::string_view param_name(Param p) {
  switch (p) {
    case Param::k: return "k";
    case Param::c: return "c";
    case Param::lambda: return "lambda";
    case Param::mu: return "mu";
  }
  return "?";
}

std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t j = 0; j < kParamCount; ++j) {
    auto p = static_cast<Param>(j);
    if (param_name(p) == name) return p;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// ParamPoly

namespace {

unsigned total(const ParamExponents& e) {
  unsigned t = 0;
  for (auto x : e) t += x;
  return t;
}

// Strict "a comes before b" in descending graded-lex order.
struct GrlexGreater {
  bool operator()(const ParamExponents& a, const ParamExponents& b) const {
    unsigned ta = total(a), tb = total(b);
    if (ta != tb) return ta > tb;
    return a > b;
  }
};

ParamExponents add(const ParamExponents& a, const ParamExponents& b) {
  ParamExponents r{};
  for (std::size_t j = 0; j < kParamCount; ++j) r[j] = static_cast<std::uint16_t>(a[j] + b[j]);
  return r;
}

bool divides(const ParamExponents& a, const ParamExponents& b) {
  for (std::size_t j = 0; j < kParamCount; ++j)
    if (a[j] > b[j]) return false;
  return true;
}

ParamExponents sub(const ParamExponents& b, const ParamExponents& a) {
  ParamExponents r{};
  for (std::size_t j = 0; j < kParamCount; ++j) r[j] = static_cast<std::uint16_t>(b[j] - a[j]);
  return r;
}

std::string coefficient_text(const GaussianRational& c) {
  if (c.is_real()) return c.str();
  if (sgn(c.re()) == 0) return c.str();
  return "(" + c.str() + ")";
}

}  // namespace

ParamPoly::ParamPoly(GaussianRational constant) {
  if (!constant.is_zero()) terms_.emplace_back(ParamExponents{}, std::move(constant));
}

ParamPoly ParamPoly::variable(Param p) {
  ParamExponents e{};
  e[static_cast<std::size_t>(p)] = 1;
  return monomial(e, 1);
}

ParamPoly ParamPoly::monomial(const ParamExponents& exps, GaussianRational coef) {
  ParamPoly r;
  if (!coef.is_zero()) r.terms_.emplace_back(exps, std::move(coef));
  return r;
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  std::map<ParamExponents, GaussianRational, GrlexGreater> acc;
  for (auto& [e, c] : terms) {
    auto [it, inserted] = acc.try_emplace(e, c);
    if (!inserted) it->second += c;
  }
  ParamPoly r;
  for (auto& [e, c] : acc)
    if (!c.is_zero()) r.terms_.emplace_back(e, std::move(c));
  return r;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_[0].first) == 0);
}

std::optional<GaussianRational> ParamPoly::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (is_constant()) return terms_[0].second;
  return std::nullopt;
}

GaussianRational ParamPoly::constant_term() const {
  if (!terms_.empty() && total(terms_.back().first) == 0) return terms_.back().second;
  return 0;
}

bool ParamPoly::uses(Param p) const {
  auto j = static_cast<std::size_t>(p);
  return std::any_of(terms_.begin(), terms_.end(), [j](const Term& t) { return t.first[j] > 0; });
}

unsigned ParamPoly::degree_in(Param p) const {
  auto j = static_cast<std::size_t>(p);
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.first[j]);
  return d;
}

unsigned ParamPoly::total_degree() const { return terms_.empty() ? 0 : total(terms_.front().first); }

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  if (&o == this) return *this *= GaussianRational(2);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  GrlexGreater before;
  auto a = terms_.begin();
  auto b = o.terms_.cbegin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && before(a->first, b->first))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || before(b->first, a->first)) {
      out.push_back(*b++);
    } else {
      GaussianRational s = a->second + b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly& ParamPoly::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.terms_[0].second;
  if (a.is_constant()) return b * a.terms_[0].second;
  std::map<ParamExponents, GaussianRational, GrlexGreater> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto e = add(ea, eb);
      auto [it, inserted] = acc.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  ParamPoly r;
  for (auto& [e, c] : acc)
    if (!c.is_zero()) r.terms_.emplace_back(e, std::move(c));
  return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

GaussianRational ParamPoly::evaluate(const std::map<Param, GaussianRational>& at) const {
  GaussianRational sum;
  for (const auto& [e, c] : terms_) {
    GaussianRational t = c;
    for (std::size_t j = 0; j < kParamCount; ++j) {
      if (e[j] == 0) continue;
      auto it = at.find(static_cast<Param>(j));
      if (it == at.end())
        throw DomainError("no value for parameter '" + std::string(param_name(static_cast<Param>(j))) + "'");
      for (unsigned n = 0; n < e[j]; ++n) t *= it->second;
    }
    sum += t;
  }
  return sum;
}

std::vector<ParamPoly> ParamPoly::coefficients_in(Param p) const {
  auto j = static_cast<std::size_t>(p);
  std::vector<std::vector<Term>> buckets(degree_in(p) + 1);
  for (const auto& [e, c] : terms_) {
    ParamExponents rest = e;
    rest[j] = 0;
    buckets[e[j]].emplace_back(rest, c);
  }
  std::vector<ParamPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

ParamPoly ParamPoly::from_coefficients(Param p, const std::vector<ParamPoly>& coeffs) {
  auto j = static_cast<std::size_t>(p);
  std::vector<Term> terms;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (const auto& [e, c] : coeffs[d].terms_) {
      ParamExponents x = e;
      x[j] = static_cast<std::uint16_t>(x[j] + d);
      terms.emplace_back(x, c);
    }
  }
  return from_terms(std::move(terms));
}

ParamPoly ParamPoly::substitute(Param p, const ParamPoly& value) const {
  auto coeffs = coefficients_in(p);
  ParamPoly r;
  for (std::size_t d = coeffs.size(); d-- > 0;) r = r * value + coeffs[d];
  return r;
}

ParamPoly ParamPoly::exact_div(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (divisor.is_constant()) return *this * divisor.leading_coefficient().inv();
  ParamPoly rem = *this;
  std::vector<Term> quotient;
  const auto& [de, dc] = divisor.leading_term();
  GaussianRational dinv = dc.inv();
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    if (!divides(de, re)) throw ConsistencyError("exact polynomial division failed");
    ParamPoly t = monomial(sub(re, de), rc * dinv);
    quotient.push_back(t.terms_[0]);
    rem -= t * divisor;
  }
  return from_terms(std::move(quotient));
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return {};
  return *this * leading_coefficient().inv();
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool is_const = total(e) == 0;
    GaussianRational coef = c;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) coef = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string monomial_text;
    for (std::size_t j = 0; j < kParamCount; ++j) {
      if (e[j] == 0) continue;
      if (!monomial_text.empty()) monomial_text += "*";
      monomial_text += param_name(static_cast<Param>(j));
      if (e[j] > 1) monomial_text += "^" + std::to_string(e[j]);
    }
    if (is_const) {
      os << coefficient_text(coef);
    } else if (coef.is_one()) {
      os << monomial_text;
    } else {
      os << coefficient_text(coef) << "*" << monomial_text;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ParamScalar

ParamScalar::ParamScalar(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void ParamScalar::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  if (den_.is_constant()) {
    const auto& d = den_.leading_coefficient();
    if (!d.is_one()) num_ *= d.inv();
    den_ = ParamPoly(1);
    return;
  }
  if (!num_.is_constant()) {
    ParamPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  GaussianRational lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    GaussianRational s = lc.inv();
    num_ *= s;
    den_ *= s;
  }
}

bool ParamScalar::is_one() const {
  auto v = num_.constant_value();
  return den_.is_constant() && v && v->is_one();
}

std::optional<GaussianRational> ParamScalar::constant_value() const {
  if (!den_.is_constant()) return std::nullopt;
  return num_.constant_value();
}

ParamScalar ParamScalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  return ParamScalar(den_, num_);
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  if (o.is_zero()) return *this;
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) { return *this += -o; }

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = ParamScalar();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

ParamScalar& ParamScalar::operator/=(const ParamScalar& o) { return *this *= o.inv(); }

ParamScalar ParamScalar::pow(unsigned e) const {
  return ParamScalar(num_.pow(e), den_.pow(e));
}

GaussianRational ParamScalar::evaluate(const std::map<Param, GaussianRational>& at) const {
  GaussianRational d = den_.evaluate(at);
  if (d.is_zero()) throw PoleError("denominator " + den_.str() + " vanishes at the assignment");
  return num_.evaluate(at) / d;
}

ParamScalar ParamScalar::substitute(Param p, const ParamScalar& value) const {
  auto horner = [&](const ParamPoly& poly) {
    auto coeffs = poly.coefficients_in(p);
    ParamScalar r;
    for (std::size_t d = coeffs.size(); d-- > 0;) r = r * value + ParamScalar(coeffs[d]);
    return r;
  };
  return horner(num_) / horner(den_);
}

std::string ParamScalar::str() const {
  if (den_.is_constant()) return num_.str();
  auto wrap = [](const ParamPoly& p) {
    std::string s = p.str();
    return p.terms().size() > 1 || !p.leading_coefficient().is_one() ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace jacobi
