#pragma once

// Exact linear algebra over the parameter fraction field, and a few
// univariate helpers (resultants, rational roots).

#include <vector>

#include "jacobi/coeffs.hpp"

namespace jacobi {

using ScalarRow = std::vector<ParamScalar>;
using ScalarMatrix = std::vector<ScalarRow>;
using PolyMatrix = std::vector<std::vector<ParamPoly>>;

/// Row echelon form with polynomial entries: denominators cleared, fraction-free
/// elimination, each row divided by its content.
struct Echelon {
  PolyMatrix rows;                    // nonzero rows only
  std::vector<std::size_t> pivots;    // pivot column of each row
  std::size_t cols = 0;
};

Echelon echelon(const ScalarMatrix& a, std::size_t cols);
std::size_t rank(const ScalarMatrix& a, std::size_t cols);
/// Kernel basis, canonical: vector j has a 1 in the j-th free column and 0 in
/// the other free columns.
std::vector<ScalarRow> nullspace(const ScalarMatrix& a, std::size_t cols);

/// Fraction-free (Bareiss) determinant of a square polynomial matrix.
ParamPoly determinant(PolyMatrix m);
ParamPoly resultant(const ParamPoly& a, const ParamPoly& b, Param p);

/// Rational roots (with no multiplicity) of a polynomial in `p` alone whose
/// coefficients are real rationals; sorted ascending.
std::vector<mpq_class> rational_roots(const ParamPoly& poly, Param p);

}  // namespace jacobi
