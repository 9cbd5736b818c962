#pragma once

#include <vector>

#include "lvint/laurent.hpp"
#include "lvint/rational.hpp"

namespace lvint {

using RationalMatrix = std::vector<std::vector<Rational>>;
using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;

/// Exact rank by fraction-free (Bareiss) elimination.  The argument is
/// consumed.
int exact_rank(RationalMatrix matrix);

/// rows x cols zero matrix of polynomials in nvars variables.
PolyMatrix poly_matrix(int rows, int cols, int nvars);

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix subtract(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix matrix_power(const PolyMatrix& a, int exponent);
bool is_zero(const PolyMatrix& a);

/// Determinant by signed permutation expansion restricted to the nonzero
/// sparsity pattern; intended for matrices with only a few nonzero entries
/// per row.
LaurentPolynomial sparse_determinant(const PolyMatrix& a);

}  // namespace lvint
