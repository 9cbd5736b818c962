#pragma once

#include <utility>
#include <vector>

#include "lvint/linalg.hpp"
#include "lvint/poisson.hpp"

namespace lvint {

/// The Lax matrices of the cyclic system LV(2kappa+1, kappa), with entries
/// that are Laurent polynomials in x_1..x_N (N = 2kappa+1):
///   X[i][i-kappa] = x_i,  M[i][i+1] = 1,  B = diag(-(x_i + ... + x_{i+kappa})),
/// all indices cyclic.
struct LaxTriple {
  int kappa = 0;
  PolyMatrix X, M, B;

  int size() const { return 2 * kappa + 1; }
};

LaxTriple build_lax(int kappa);

/// det(X + lambda*M - mu*Id) over N+2 variables (lambda and mu appended after
/// x_N), after substituting zero for the last zero_tail x-variables.
LaurentPolynomial characteristic_polynomial(int kappa, int zero_tail = 0);

/// Extracts the coefficient polynomials from the characteristic determinant:
///   det = lambda^N - mu^N + sum_i K_i lambda^{kappa-i} mu^{kappa-i}.
/// Returns K_0..K_kappa over N - zero_tail variables (trailing entries are
/// zero when zero_tail > 0).  A determinant violating this shape raises
/// domain_error naming the offending (lambda, mu) coefficient.
std::vector<LaurentPolynomial> characteristic_coefficients(int kappa, int zero_tail = 0);

/// The two matrix identities behind the Lax formulation, as residuals:
///   first  = [M,B] - [X, M^{kappa+1}]
///   second = Xdot - [X,B], with each entry of Xdot substituted from the
///            equations of motion of LV(2kappa+1, kappa).
/// Both must be identically zero matrices.
std::pair<PolyMatrix, PolyMatrix> lax_residuals(int kappa);

}  // namespace lvint
