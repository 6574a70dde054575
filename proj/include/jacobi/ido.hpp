#pragma once

// The invariant differential operator algebras D_k (index fixed to I_N / 2pi),
// realized on the left module U / I_k with the nu-dressed letters.

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jacobi/coeffs.hpp"
#include "jacobi/pbw.hpp"
#include "jacobi/report.hpp"

namespace jacobi {

struct IdoConfig {
  unsigned N = 1;
  ParamScalar k = ParamScalar::param(Param::k);

  static IdoConfig symbolic(unsigned N);
  static IdoConfig at(unsigned N, const GaussianRational& k);
  bool symbolic_k() const { return k.uses(Param::k); }
  /// "symbolic" or the value of k.
  std::string k_label() const;
  /// Same N with k replaced by -k.
  IdoConfig negated() const;
  friend bool operator==(const IdoConfig& a, const IdoConfig& b) { return a.N == b.N && a.k == b.k; }
};

enum class IdoBasis : std::uint8_t { A, B };

/// F_nu^iF E_nu^iE f^If e^Ie C^iC (iC = 0 in basis A). The vectors have length N.
struct IdoMonomial {
  std::uint16_t iF = 0;
  std::uint16_t iE = 0;
  std::vector<std::uint16_t> If;
  std::vector<std::uint16_t> Ie;
  std::uint16_t iC = 0;

  static IdoMonomial one(unsigned N);
  unsigned size_f() const;
  unsigned size_e() const;
  /// 2(iF + iE + iC) + |If| + |Ie|.
  unsigned degree() const;
  /// 2 iF + |If| - 2 iE - |Ie|; zero exactly on the monomials of D_k.
  int balance() const;
  bool is_one() const;
  friend auto operator<=>(const IdoMonomial&, const IdoMonomial&) = default;
};

class IdoEngine;

class IdoElement {
 public:
  using TermMap = std::map<IdoMonomial, ParamScalar>;

  IdoElement(IdoConfig cfg, IdoBasis basis) : cfg_(std::move(cfg)), basis_(basis) {}
  IdoElement(IdoConfig cfg, IdoBasis basis, TermMap terms);

  static IdoElement scalar(const IdoConfig& cfg, const ParamScalar& s, IdoBasis basis = IdoBasis::A);
  static IdoElement monomial(const IdoConfig& cfg, IdoBasis basis, const IdoMonomial& m,
                             const ParamScalar& c = 1);

  const IdoConfig& config() const { return cfg_; }
  IdoBasis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamScalar coefficient(const IdoMonomial& m) const;
  unsigned degree() const;

  IdoElement to(IdoBasis target) const;

  IdoElement operator-() const;
  IdoElement& operator+=(const IdoElement& o);
  IdoElement& operator-=(const IdoElement& o);
  IdoElement& operator*=(const ParamScalar& s);
  friend IdoElement operator+(IdoElement a, const IdoElement& b) { return a += b; }
  friend IdoElement operator-(IdoElement a, const IdoElement& b) { return a -= b; }
  friend IdoElement operator*(IdoElement a, const ParamScalar& s) { return a *= s; }
  friend IdoElement operator*(const ParamScalar& s, IdoElement a) { return a *= s; }
  /// Product in D_k; the result uses the basis of the left factor.
  friend IdoElement operator*(const IdoElement& a, const IdoElement& b);
  /// Basis-independent equality.
  friend bool operator==(const IdoElement& a, const IdoElement& b);

  IdoElement pow(unsigned e) const;
  std::string str() const;

 private:
  friend class IdoEngine;
  void add_term(const IdoMonomial& m, const ParamScalar& c);
  IdoConfig cfg_;
  IdoBasis basis_;
  TermMap terms_;
};

IdoElement commutator(const IdoElement& a, const IdoElement& b);

/// Per-configuration engine with memo tables; shared and thread-safe.
std::shared_ptr<IdoEngine> engine_for(const IdoConfig& cfg);

// Named elements (basis A).
IdoElement ido_P(const IdoConfig& cfg, unsigned r, unsigned s);  // F_nu e_r e_s
IdoElement ido_Q(const IdoConfig& cfg, unsigned r, unsigned s);  // E_nu f_r f_s
IdoElement ido_Ers(const IdoConfig& cfg, unsigned r, unsigned s);
IdoElement ido_Etotal(const IdoConfig& cfg);
/// F_nu E_nu as a D_k element.
IdoElement ido_FE(const IdoConfig& cfg);
IdoElement casimir(const IdoConfig& cfg);

/// Word in the letters F_nu, E_nu, H_nu, f_r, e_r applied to [1]. Letters are
/// given left to right, e.g. {"F", "e1", "e1"}. Any word is allowed; the
/// result is a vector of the module U / I_k written in basis A.
IdoElement ido_word(const IdoConfig& cfg, const std::vector<std::string>& letters);

struct IdoGenerator {
  std::string name;  // P12, Q11, E21, C
  IdoElement value;
};
/// P_rs, Q_rs (r <= s), E_rs (all r, s) and C.
std::vector<IdoGenerator> generators(const IdoConfig& cfg);

/// Reduction of a k^J-invariant element of U(g^J_N) (tilde presentation,
/// optionally localized at rank 1) into basis A.
IdoElement reduce(const UeaElement& e, const IdoConfig& cfg);

/// Basis-A monomials / basis-B monomials with degree <= d.
std::vector<IdoMonomial> monomials(unsigned N, IdoBasis basis, unsigned max_degree, bool c_counts_four = false);

/// Kernel of x -> ([x, s])_{s in S} on the basis-B span of degree <= d.
/// Each result vector is returned as an element in basis B; the basis is
/// canonical (reduced echelon on the monomial order).
std::vector<IdoElement> commutant(const IdoConfig& cfg, const std::vector<IdoElement>& S, unsigned max_degree,
                                  unsigned threads = 0);

/// theta~_k : D_k -> D_{-k}.
IdoElement theta_tilde_k(const IdoElement& a);
/// mu_d on D_1 (N = 1): multiplies the ad(E)-weight 2s part by d^s.
IdoElement mu_d(const IdoElement& a, const GaussianRational& d);

VerifyReport verify_aN(const IdoConfig& cfg);

/// Dimension of the span of the given elements.
std::size_t span_dimension(const std::vector<IdoElement>& elems);

}  // namespace jacobi
