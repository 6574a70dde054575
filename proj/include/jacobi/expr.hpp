#pragma once

// Expression language for elements of U(g^J_N).
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (['*'] factor)*
//   factor := atom ['^' uint]
//   atom   := literal | 'i' | 'k' | generator | '(' expr ')' | '[' expr ',' expr ']'
//
// Generators: E F H e1.. f1.. Z11.. and their tilde forms tE tF tH te1 tf1 tZ11,
// plus W (the inverse of Z11 or tZ11, rank one only).

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jacobi/pbw.hpp"

namespace jacobi {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public DomainError {
 public:
  enum class Kind : std::uint8_t { syntax, unknown_generator, index_range, context };
  ParseError(Kind kind, Span span, const std::string& message);
  Kind kind() const { return kind_; }
  const Span& span() const { return span_; }

 private:
  Kind kind_;
  Span span_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind : std::uint8_t { literal, imaginary, param_k, generator, product, sum, power, commutator, group };
  Kind kind = Kind::literal;
  Span span;
  mpq_class value;            // literal (non-negative)
  GeneratorSymbol gen;        // generator
  unsigned exponent = 0;      // power
  std::vector<ExprPtr> children;
  std::vector<bool> negated;  // sum: sign of each child
};

/// Structural equality, ignoring spans.
bool same_shape(const Expr& a, const Expr& b);

/// Syntax only; index checks need N (see check_indices).
ExprPtr parse(std::string_view text);
/// ParseError when an index exceeds N, or W is used with N != 1.
void check_indices(const Expr& e, unsigned N);

/// Canonical text: '*' between factors, parentheses only for group nodes.
std::string render(const Expr& e);

/// Which generators an expression uses.
struct ExprUsage {
  bool standard = false;
  bool tilde = false;
  bool W = false;
};
ExprUsage usage(const Expr& e);

/// Evaluates in U(g^J_N) with the given coefficient for k. The tilde
/// presentation is used when `force_tilde` is set or any tilde generator
/// occurs; standard generators are then converted. W selects the localized
/// algebra and cannot be combined with a change of basis.
UeaElement evaluate(const Expr& e, unsigned N, const ParamScalar& k, bool force_tilde = false);

/// parse + check_indices + evaluate.
UeaElement parse_element(std::string_view text, unsigned N, const ParamScalar& k, bool force_tilde = false);

}  // namespace jacobi
