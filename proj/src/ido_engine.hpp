#pragma once

#include <shared_mutex>
#include <utility>

#include "jacobi/ido.hpp"

namespace jacobi {

enum class Letter : std::uint8_t { F, E, H, f, e, C, tF, tE, tH };

class IdoEngine {
 public:
  using Terms = IdoElement::TermMap;

  explicit IdoEngine(IdoConfig cfg);
  const IdoConfig& config() const { return cfg_; }
  unsigned N() const { return cfg_.N; }

  /// One letter applied to a basis-A vector. `r` is 1-based for f and e.
  Terms act(Letter L, unsigned r, const Terms& v) const;
  void act_mono(Letter L, unsigned r, const IdoMonomial& m, const ParamScalar& s, Terms& out) const;

  /// Basis-A monomial (as a word) times a basis-A vector.
  const Terms& mono_times_mono(const IdoMonomial& x, const IdoMonomial& y) const;
  Terms multiply_a(const Terms& x, const Terms& y) const;

  const Terms& c_power(unsigned c) const;
  const Terms& b_to_a(const IdoMonomial& m) const;
  const Terms& a_to_b(const IdoMonomial& m) const;
  Terms to_a(const Terms& b) const;
  Terms to_b(const Terms& a) const;

  /// tF^alpha tE^beta tf^I te^J [1].
  const Terms& tilde_word(const IdoMonomial& m) const;

  static void add(Terms& out, const IdoMonomial& m, const ParamScalar& c);
  static void add_all(Terms& out, const Terms& v, const ParamScalar& scale);

 private:
  Terms compute_mono_times_mono(const IdoMonomial& x, const IdoMonomial& y) const;
  Terms compute_a_to_b(const IdoMonomial& m) const;
  void weyl_H(const IdoMonomial& m, const ParamScalar& shift, const ParamScalar& s, Terms& out) const;

  IdoConfig cfg_;
  ParamScalar kN2_;  // k + N/2
  ParamScalar half_;

  mutable std::shared_mutex mu_;
  mutable std::map<std::pair<IdoMonomial, IdoMonomial>, Terms> prod_memo_;
  mutable std::map<IdoMonomial, Terms> b2a_memo_;
  mutable std::map<IdoMonomial, Terms> a2b_memo_;
  mutable std::map<IdoMonomial, Terms> tilde_memo_;
  mutable std::vector<std::unique_ptr<Terms>> c_powers_;
};

}  // namespace jacobi
