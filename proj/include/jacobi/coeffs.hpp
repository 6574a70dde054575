#pragma once

// Exact scalars: Gaussian rationals Q(i) and the rational function field
// Q(i)(k, c, lambda, mu) over the fixed parameter list.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "jacobi/errors.hpp"

namespace jacobi {

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long n) : re_(n) {}  // NOLINT(implicit)
  GaussianRational(long num, long den);
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }
  /// Parses "p", "p/q", "-p/q" (real only).
  static GaussianRational parse_rational(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integer() const;
  /// Real and a (possibly negative) integer: returns it.
  std::optional<long> as_integer() const;

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inv() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Lexicographic on (re, im); only used for deterministic ordering.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

  /// Renders as `a/b + (c/d)i`; integer imaginary parts drop the parentheses.
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// The fixed, declared parameter list.
enum class Param : std::uint8_t { k = 0, c = 1, lambda = 2, mu = 3 };
inline constexpr std::size_t kParamCount = 4;
std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

using ParamExponents = std::array<std::uint16_t, kParamCount>;

/// Sparse multivariate polynomial over Q(i). Terms are kept sorted by
/// descending graded-lexicographic order of the exponent vectors.
class ParamPoly {
 public:
  using Term = std::pair<ParamExponents, GaussianRational>;

  ParamPoly() = default;
  ParamPoly(GaussianRational constant);  // NOLINT(implicit)
  ParamPoly(long constant) : ParamPoly(GaussianRational(constant)) {}  // NOLINT(implicit)
  static ParamPoly variable(Param p);
  static ParamPoly monomial(const ParamExponents& exps, GaussianRational coef);
  /// Builds from arbitrary terms, merging duplicates and dropping zeros.
  static ParamPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<GaussianRational> constant_value() const;
  /// Coefficient of the exponent vector (0,...,0).
  GaussianRational constant_term() const;
  bool uses(Param p) const;
  unsigned degree_in(Param p) const;
  unsigned total_degree() const;

  const Term& leading_term() const { return terms_.front(); }
  const GaussianRational& leading_coefficient() const { return terms_.front().second; }

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const GaussianRational& s);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const GaussianRational& s) { return a *= s; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

  ParamPoly pow(unsigned e) const;

  GaussianRational evaluate(const std::map<Param, GaussianRational>& at) const;
  /// Substitutes a polynomial for one parameter.
  ParamPoly substitute(Param p, const ParamPoly& value) const;

  /// Coefficients as a polynomial in `p`: index = power of p.
  std::vector<ParamPoly> coefficients_in(Param p) const;
  static ParamPoly from_coefficients(Param p, const std::vector<ParamPoly>& coeffs);

  /// Exact division; throws ConsistencyError when `divisor` does not divide.
  ParamPoly exact_div(const ParamPoly& divisor) const;
  /// Divides by the leading coefficient.
  ParamPoly monic() const;

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

/// Canonical gcd: monic under the graded-lexicographic leading term; gcd(0,0) = 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);
/// Pseudo-remainder of `a` by `b` as polynomials in `p`.
ParamPoly pseudo_remainder(const ParamPoly& a, const ParamPoly& b, Param p);

/// Element of the fraction field: num/den with gcd(num, den) = 1 and den monic.
class ParamScalar {
 public:
  ParamScalar() : num_(), den_(1) {}
  ParamScalar(long n) : num_(n), den_(1) {}  // NOLINT(implicit)
  ParamScalar(GaussianRational g) : num_(std::move(g)), den_(1) {}  // NOLINT(implicit)
  ParamScalar(ParamPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(implicit)
  ParamScalar(ParamPoly num, ParamPoly den);

  static ParamScalar param(Param p) { return ParamScalar(ParamPoly::variable(p)); }
  static ParamScalar rational(long num, long den) { return GaussianRational(num, den); }

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<GaussianRational> constant_value() const;
  bool is_polynomial() const { return den_.is_constant(); }
  bool uses(Param p) const { return num_.uses(p) || den_.uses(p); }

  ParamScalar inv() const;
  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  ParamScalar& operator/=(const ParamScalar& o);
  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
  friend ParamScalar operator/(ParamScalar a, const ParamScalar& b) { return a /= b; }
  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  ParamScalar pow(unsigned e) const;

  /// Throws PoleError when the denominator vanishes, DomainError when a used
  /// parameter is missing from the assignment.
  GaussianRational evaluate(const std::map<Param, GaussianRational>& at) const;
  ParamScalar substitute(Param p, const ParamScalar& value) const;

  std::string str() const;

 private:
  void normalize();
  ParamPoly num_;
  ParamPoly den_;
};

}  // namespace jacobi
