#pragma once

// Universal enveloping algebras in PBW normal form.

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jacobi/lie.hpp"

namespace jacobi {

/// Exponent vector aligned with the presentation's generator order.
using Monomial = std::vector<std::uint16_t>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct LocalizationConfig {
  /// (central generator g, adjoined symbol W) with g*W -> 1.
  std::vector<std::pair<std::size_t, std::size_t>> inverse_pairs;
};

class UeaAlgebra {
 public:
  explicit UeaAlgebra(PresentationPtr p, LocalizationConfig loc = {});

  const PresentationPtr& presentation() const { return pres_; }
  const LocalizationConfig& localization() const { return loc_; }
  bool localized() const { return !loc_.inverse_pairs.empty(); }
  std::size_t size() const { return pres_->size(); }

  using Terms = std::map<Monomial, GaussianRational>;
  /// g_j times a normal-ordered monomial, straightened. Memoized; safe for
  /// concurrent callers.
  const Terms& left_mul_gen(std::size_t j, const Monomial& m) const;
  /// Product of two normal-ordered monomials.
  Terms mul_monomials(const Monomial& a, const Monomial& b) const;

  std::size_t memo_size() const;

 private:
  Terms compute_left_mul(std::size_t j, const Monomial& m) const;
  void cancel(Monomial& m) const;

  PresentationPtr pres_;
  LocalizationConfig loc_;
  std::vector<bool> central_;
  mutable std::shared_mutex memo_mu_;
  mutable std::unordered_map<Monomial, Terms, MonomialHash> memo_;
};

using AlgebraPtr = std::shared_ptr<const UeaAlgebra>;

/// Shared, cached algebras.
AlgebraPtr uea_of(const PresentationPtr& p);
AlgebraPtr uea_jacobi(unsigned N, BasisKind basis);
AlgebraPtr uea_sl2();
/// U(g^J_1)[W] with W the inverse of Z11 (tilde: of tZ11).
AlgebraPtr uea_localized_rank1(BasisKind basis);

class UeaElement {
 public:
  using TermMap = std::map<Monomial, ParamScalar>;

  explicit UeaElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  UeaElement(AlgebraPtr alg, TermMap terms);

  static UeaElement scalar(AlgebraPtr alg, const ParamScalar& s);
  static UeaElement generator(AlgebraPtr alg, std::size_t index);
  static UeaElement generator(AlgebraPtr alg, const std::string& name);
  static UeaElement from_lincomb(AlgebraPtr alg, const LinComb& v);
  /// Product of generators in the given (arbitrary) order.
  static UeaElement word(AlgebraPtr alg, const std::vector<std::size_t>& letters);

  const AlgebraPtr& algebra() const { return alg_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamScalar constant_term() const;
  ParamScalar coefficient(const Monomial& m) const;
  bool involves(std::size_t generator) const;
  unsigned degree() const;

  UeaElement operator-() const;
  UeaElement& operator+=(const UeaElement& o);
  UeaElement& operator-=(const UeaElement& o);
  UeaElement& operator*=(const ParamScalar& s);
  friend UeaElement operator+(UeaElement a, const UeaElement& b) { return a += b; }
  friend UeaElement operator-(UeaElement a, const UeaElement& b) { return a -= b; }
  friend UeaElement operator*(const UeaElement& a, const UeaElement& b);
  friend UeaElement operator*(UeaElement a, const ParamScalar& s) { return a *= s; }
  friend UeaElement operator*(const ParamScalar& s, UeaElement a) { return a *= s; }
  friend bool operator==(const UeaElement& a, const UeaElement& b);

  UeaElement pow(unsigned e) const;
  std::string str() const;

 private:
  void add_term(const Monomial& m, const ParamScalar& c);
  AlgebraPtr alg_;
  TermMap terms_;
};

UeaElement commutator(const UeaElement& a, const UeaElement& b);
/// ad(g_j)(a) = [g_j, a].
UeaElement ad(std::size_t j, const UeaElement& a);

/// Multiplicative extension of a Lie map; the codomain algebra must present
/// the map's codomain.
UeaElement apply_map(const LinearLieMap& m, const UeaElement& e, const AlgebraPtr& target);
/// Same-algebra convenience.
UeaElement apply_map(const LinearLieMap& m, const UeaElement& e);

/// H^2 + 2H + 4FE in the sl2 part (tilde symbols in the tilde basis); h^2 + 2h + 4yx in sl2.
UeaElement casimir_sl2(const AlgebraPtr& alg);

/// nu(X) for X in {E, F, H} at N = 1 in the localized algebra.
UeaElement nu_rank1(const AlgebraPtr& loc, GenKind x);
/// Multiplicative extension of nu to elements built from E, F, H only.
UeaElement nu_extend(const UeaElement& sl2_part);
/// Z11 (nu(Omega_sl2) - 5/4); throws ConsistencyError if W survives.
UeaElement omega_rank1(const AlgebraPtr& loc);
/// Moves an element without W from the localized algebra to `target`.
UeaElement drop_localization(const UeaElement& e, const AlgebraPtr& target);

}  // namespace jacobi
