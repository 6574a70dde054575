#pragma once

// Characters of D_k: closed forms, relation certificates and an exact solver.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacobi/ido.hpp"

namespace jacobi {

/// Noncommutative polynomial in the generators of D_k (indices into
/// generators(cfg)); the empty word is the unit.
class NcPoly {
 public:
  using Word = std::vector<std::size_t>;
  NcPoly() = default;
  static NcPoly constant(const ParamScalar& s);
  static NcPoly gen(std::size_t index);

  const std::map<Word, ParamScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const ParamScalar& s);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const ParamScalar& s) { return a *= s; }
  friend NcPoly operator*(const ParamScalar& s, NcPoly a) { return a *= s; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

  /// Value in D_k, basis A.
  IdoElement evaluate(const IdoConfig& cfg, const std::vector<IdoGenerator>& gens) const;
  /// Value under a commutative assignment of the generators.
  ParamScalar evaluate(const std::vector<ParamScalar>& values) const;
  std::string str(const std::vector<IdoGenerator>& gens) const;

 private:
  void add(const Word& w, const ParamScalar& c);
  std::map<Word, ParamScalar> terms_;
};

struct Relation {
  std::string family;  // gl, EP, EQ, central, PQ, QP, quad, PP, QQ, EPsym, QEsym
  std::string name;
  NcPoly poly;         // vanishes in D_k
};

/// All relation instances for the configuration, each checked to vanish in
/// D_k on first use (ConsistencyError otherwise). Cached.
const std::vector<Relation>& relations(const IdoConfig& cfg);

struct Character {
  IdoConfig cfg;
  std::vector<std::string> names;  // generators(cfg) order
  std::vector<ParamScalar> values;
  /// N = 1 only: central character c and weight lambda (value of E plus k).
  std::optional<ParamScalar> c_label;
  std::optional<ParamScalar> lambda_label;

  ParamScalar value(const std::string& name) const;
  std::string str() const;
  friend bool operator==(const Character& a, const Character& b) {
    return a.cfg == b.cfg && a.values == b.values;
  }
};

Character chi_f(const IdoConfig& cfg);
Character chi_e(const IdoConfig& cfg);

/// Coefficients (one per generator, then the constant) expressing x as a
/// linear combination of the generators and 1, if it is one.
std::optional<std::vector<ParamScalar>> linear_in_generators(const IdoElement& x);
/// chi(x) for x in the span of the generators and 1; DomainError otherwise.
ParamScalar evaluate(const Character& chi, const IdoElement& x);

/// chi composed with theta~: a character of D_{-k} pulled back along theta~_{-k}.
/// Returns chi o theta~_k where chi is a character at -k.
Character pullback_theta(const Character& chi_at_minus_k);

VerifyReport verify_character(const Character& chi);

struct CharacterSet {
  std::vector<Character> characters;  // sorted by value vector
  VerifyReport report;
};

/// Solves the relation system for all characters. UnsupportedError when the
/// solution set is not finite or has roots outside Q(i)(k).
CharacterSet enumerate_characters(const IdoConfig& cfg);

}  // namespace jacobi
