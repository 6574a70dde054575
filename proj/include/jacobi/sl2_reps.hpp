#pragma once

// Rank-one representation theory: the embedding of D_k into U(sl2), the
// admissible weight modules V_k(c, lambda), and restrictions of sl2 modules.

#include <optional>
#include <string>
#include <vector>

#include "jacobi/characters.hpp"
#include "jacobi/ido.hpp"
#include "jacobi/pbw.hpp"

namespace jacobi {

/// iota_k on a D_k element (N = 1), landing in U(sl2) over the same k.
UeaElement iota(const IdoElement& a);

struct IotaImages {
  UeaElement P, Q, E, C;
};
IotaImages iota_generators(const IdoConfig& cfg);

/// Relations among the images, and linear independence of the images of
/// basis-B monomials of degree <= max_degree.
VerifyReport verify_embedding(const IdoConfig& cfg, unsigned max_degree = 4);

struct DeltaSet {
  std::optional<GaussianRational> m_minus;  // nullopt: -infinity
  std::optional<GaussianRational> m_plus;   // nullopt: +infinity
};

/// m^-_k(c, lambda), m^+_k(c, lambda). Needs exact numbers.
DeltaSet delta_set(const GaussianRational& c, const GaussianRational& lambda, const GaussianRational& k);

enum class ModuleKind : std::uint8_t { Vk, L, Mminus, Mplus, P };
std::string module_kind_name(ModuleKind kind);
std::optional<ModuleKind> module_kind_from_name(const std::string& s);

struct ModuleParams {
  GaussianRational k;
  GaussianRational c;
  GaussianRational lambda;
  unsigned n = 0;  // for L(n)
};

struct WeightModuleSpec {
  ModuleKind kind = ModuleKind::Vk;
  GaussianRational k, c, lambda;
  std::optional<GaussianRational> lower;  // lowest weight, nullopt if unbounded
  std::optional<GaussianRational> upper;  // highest weight, nullopt if unbounded

  bool contains(const GaussianRational& mu) const;
  std::optional<std::size_t> dimension() const;
  /// Weights in [from, to] that belong to the module, ascending.
  std::vector<GaussianRational> window(const GaussianRational& from, const GaussianRational& to) const;
  /// All weights; DomainError when infinite.
  std::vector<GaussianRational> weights() const;
  std::string label() const;
};

/// Closed-form action on v_mu: P v_mu = p(mu) v_{mu-2}, Q v_mu = q(mu) v_{mu+2},
/// E v_mu = (mu - k) v_mu, C v_mu = c v_mu. The coefficients are polynomials in
/// the parameter mu, with separate branches above and below lambda.
struct ActionTable {
  ParamScalar q_upper;  // mu >= lambda
  ParamScalar q_lower;  // mu < lambda
  ParamScalar p_upper;  // mu > lambda
  ParamScalar p_lower;  // mu <= lambda
  // sl2 action for modules of U(sl2): x v_mu = x_coef v_{mu+2}, y v_mu = y_coef v_{mu-2}.
  std::optional<ParamScalar> x_coef, y_coef;
};

struct WeightModule {
  WeightModuleSpec spec;
  ActionTable table;

  /// Coefficients at a concrete weight; zero when the source or target lies outside.
  GaussianRational p_at(const GaussianRational& mu) const;
  GaussianRational q_at(const GaussianRational& mu) const;
  GaussianRational e_at(const GaussianRational& mu) const { return mu - spec.k; }
};

/// (1/4)(mu - k + 1/2)(mu - k + 3/2)(c - mu^2 - 2mu): eigenvalue of P Q on v_mu.
ParamScalar alpha(const GaussianRational& c, const GaussianRational& k);
/// (1/4)(mu - k - 1/2)(mu - k - 3/2)(c - mu^2 + 2mu): eigenvalue of Q P on v_mu.
ParamScalar beta(const GaussianRational& c, const GaussianRational& k);

WeightModule build_module(ModuleKind kind, const ModuleParams& params);

/// Relations of D_1 on the closed-form coefficients, boundary vanishing, and
/// admissibility bookkeeping.
VerifyReport verify_module(const WeightModule& m);
bool is_irreducible(const WeightModule& m);
/// Same k and c, and the second weight lies in the support of the first.
bool equivalent(const WeightModule& a, const WeightModule& b);

struct Interval {
  std::optional<GaussianRational> lower, upper;
  friend bool operator==(const Interval&, const Interval&) = default;
  std::string str() const;
};

struct Restriction {
  bool splits = false;
  Interval sub, quotient;
  std::optional<GaussianRational> sub_lambda, quotient_lambda;  // V_k labels
  VerifyReport report;
};

/// Decomposition of an sl2 module (L, Mminus, Mplus, P) restricted to D_k via iota_k.
Restriction restrict_sl2(const WeightModule& m, const GaussianRational& k);

/// D_k and D_k' are isomorphic iff k = +-k'.
bool iso_decision(const GaussianRational& k, const GaussianRational& k2);

VerifyReport verify_isos(const GaussianRational& k);

}  // namespace jacobi
