#pragma once

// Finite-dimensional Lie algebras given by structure constants, the Jacobi
// algebra in its standard and tilde bases, and linear maps between them.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/coeffs.hpp"

namespace jacobi {

enum class GenKind : std::uint8_t { E, F, H, e, f, Z, x, y, h, W, eps };

struct GeneratorSymbol {
  GenKind kind{};
  bool tilde = false;
  std::uint16_t r = 0;
  std::uint16_t s = 0;

  static GeneratorSymbol make(GenKind kind, bool tilde = false, unsigned r = 0, unsigned s = 0);
  /// Token used by the parser and renderer: E, e1, Z12, tE, te1, tZ12, x, W, eps12.
  std::string name() const;
  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

/// Sparse linear combination of generators, keyed by generator index.
using LinComb = std::map<std::size_t, GaussianRational>;

void add_to(LinComb& acc, const LinComb& v, const GaussianRational& scale = 1);
LinComb scaled(const LinComb& v, const GaussianRational& s);
LinComb single(std::size_t index, GaussianRational coef = 1);

enum class BasisKind : std::uint8_t { standard, tilde, sl2, gl, other };

class LiePresentation {
 public:
  struct Bracket {
    std::size_t a;
    std::size_t b;
    LinComb value;  // [g_a, g_b]
  };

  /// Validates antisymmetry, closure and the Jacobi identity eagerly.
  LiePresentation(std::string label, std::vector<GeneratorSymbol> gens, const std::vector<Bracket>& brackets,
                  BasisKind kind = BasisKind::other, unsigned rank = 0);

  const std::string& label() const { return label_; }
  BasisKind kind() const { return kind_; }
  unsigned rank() const { return rank_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<GeneratorSymbol>& generators() const { return gens_; }
  const GeneratorSymbol& generator(std::size_t i) const { return gens_.at(i); }
  std::optional<std::size_t> find(const GeneratorSymbol& g) const;
  /// Throws DomainError for unknown symbols.
  std::size_t index_of(const GeneratorSymbol& g) const;
  std::optional<std::size_t> find_name(const std::string& name) const;

  const LinComb& bracket_gen(std::size_t a, std::size_t b) const;
  LinComb bracket(const LinComb& a, const LinComb& b) const;
  bool is_central(std::size_t a) const;

  /// A triple (a, b, c) violating the Jacobi identity, if any.
  std::optional<std::array<std::size_t, 3>> jacobi_violation() const;

  std::string render(const LinComb& v) const;

  /// Presentation with one extra central generator appended (the localization symbol).
  std::shared_ptr<const LiePresentation> with_central(const GeneratorSymbol& g) const;

 private:
  std::string label_;
  std::vector<GeneratorSymbol> gens_;
  std::vector<std::vector<LinComb>> table_;
  std::map<GeneratorSymbol, std::size_t> index_;
  BasisKind kind_;
  unsigned rank_;
};

using PresentationPtr = std::shared_ptr<const LiePresentation>;

PresentationPtr make_jacobi(unsigned N, BasisKind basis);
PresentationPtr make_sl2();
/// gl_N on the elementary matrices eps_rs (row-major order).
PresentationPtr make_gl(unsigned N);

/// Linear map between presentations, given on generators.
class LinearLieMap {
 public:
  /// When `require_automorphism` is set the map is checked to be a bijective
  /// Lie homomorphism and ConsistencyError is raised otherwise.
  LinearLieMap(PresentationPtr domain, PresentationPtr codomain, std::vector<LinComb> images,
               bool require_automorphism);

  const PresentationPtr& domain() const { return domain_; }
  const PresentationPtr& codomain() const { return codomain_; }
  const LinComb& image(std::size_t i) const { return images_.at(i); }
  const std::vector<LinComb>& images() const { return images_; }

  LinComb apply(const LinComb& v) const;
  /// (*this) after `first`.
  LinearLieMap after(const LinearLieMap& first) const;
  LinearLieMap inverse() const;
  bool preserves_brackets() const;
  bool is_invertible() const;
  bool is_automorphism() const { return preserves_brackets() && is_invertible(); }
  bool is_identity() const;

  friend bool operator==(const LinearLieMap& a, const LinearLieMap& b);

 private:
  PresentationPtr domain_;
  PresentationPtr codomain_;
  std::vector<LinComb> images_;
};

using Matrix = std::vector<std::vector<GaussianRational>>;

/// Inverse of a square matrix over Q(i); throws DomainError when singular.
Matrix invert(const Matrix& m);
GaussianRational determinant(const Matrix& m);

LinearLieMap theta(unsigned N);
LinearLieMap theta_tilde(unsigned N);
/// X -> X~ written in standard coordinates (standard -> standard).
LinearLieMap tau(unsigned N);
/// mu_M on the tilde presentation; throws DomainError when M is singular.
LinearLieMap mu_matrix(const Matrix& M);
LinearLieMap identity_map(PresentationPtr p);
LinearLieMap theta_sl2();
LinearLieMap mu_sl2(const GaussianRational& d);

/// Change of basis between the standard and tilde presentations of the same rank.
LinComb basis_convert(const LinComb& v, const LiePresentation& from, const LiePresentation& to);
/// The linear map behind basis_convert as a presentation morphism (a Lie isomorphism).
LinearLieMap basis_change(const PresentationPtr& from, const PresentationPtr& to);

}  // namespace jacobi
