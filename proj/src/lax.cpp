#include "lvint/lax.hpp"

#include <map>
#include <string>

namespace lvint {

namespace {

int wrap(int index, int size) { return ((index % size) + size) % size; }

}  // namespace

LaxTriple build_lax(int kappa) {
  if (kappa < 1) throw std::invalid_argument("build_lax: requires kappa >= 1");
  const int size = 2 * kappa + 1;
  LaxTriple lax;
  lax.kappa = kappa;
  lax.X = poly_matrix(size, size, size);
  lax.M = poly_matrix(size, size, size);
  lax.B = poly_matrix(size, size, size);
  for (int i = 0; i < size; ++i) {
    lax.X[i][wrap(i - kappa, size)] = LaurentPolynomial::variable(size, i);
    lax.M[i][wrap(i + 1, size)] = LaurentPolynomial::constant(size, 1);
    LaurentPolynomial b(size);
    for (int t = 0; t <= kappa; ++t) b -= LaurentPolynomial::variable(size, wrap(i + t, size));
    lax.B[i][i] = std::move(b);
  }
  return lax;
}

LaurentPolynomial characteristic_polynomial(int kappa, int zero_tail) {
  if (kappa < 1) throw std::invalid_argument("characteristic_polynomial: requires kappa >= 1");
  const int size = 2 * kappa + 1;
  if (zero_tail < 0 || zero_tail > kappa)
    throw std::invalid_argument("characteristic_polynomial: zero_tail must lie in [0, kappa]");
  const int nvars = size + 2;  // x_1..x_N, lambda, mu
  const int lambda = size, mu = size + 1;

  // Three cyclic diagonals: x_i, lambda, -mu.  Entries whose variable is in
  // the zeroed tail are dropped.
  PolyMatrix d = poly_matrix(size, size, nvars);
  for (int i = 0; i < size; ++i) {
    if (i < size - zero_tail)
      d[i][wrap(i - kappa, size)] += LaurentPolynomial::variable(nvars, i);
    d[i][wrap(i + 1, size)] += LaurentPolynomial::variable(nvars, lambda);
    d[i][i] -= LaurentPolynomial::variable(nvars, mu);
  }
  return sparse_determinant(d);
}

std::vector<LaurentPolynomial> characteristic_coefficients(int kappa, int zero_tail) {
  const int size = 2 * kappa + 1;
  const int nvars = size + 2;
  const int lambda = size, mu = size + 1;
  const LaurentPolynomial det = characteristic_polynomial(kappa, zero_tail);

  // Bucket the determinant by (lambda, mu) exponents.
  std::map<std::pair<int, int>, LaurentPolynomial> buckets;
  for (const auto& [exps, coeff] : det.terms()) {
    Exponents xpart(exps.begin(), exps.begin() + size);
    xpart.resize(nvars, 0);
    auto key = std::make_pair(exps[lambda], exps[mu]);
    auto [it, inserted] = buckets.try_emplace(key, LaurentPolynomial(nvars));
    it->second += LaurentPolynomial::monomial(nvars, std::move(xpart), coeff);
  }

  std::vector<LaurentPolynomial> coefficients(kappa + 1, LaurentPolynomial(size - zero_tail));
  const LaurentPolynomial one = LaurentPolynomial::constant(nvars, 1);
  for (auto& [key, poly] : buckets) {
    const auto [el, em] = key;
    if (el == size && em == 0) {
      if (poly != one)
        throw domain_error("characteristic_coefficients: lambda^" + std::to_string(size) +
                           " coefficient is " + poly.to_string());
    } else if (el == 0 && em == size) {
      if (poly != -one)
        throw domain_error("characteristic_coefficients: mu^" + std::to_string(size) +
                           " coefficient is " + poly.to_string());
    } else if (el == em && el <= kappa) {
      coefficients[kappa - el] = poly.truncate_vars(size - zero_tail);
    } else {
      throw domain_error("characteristic_coefficients: unexpected coefficient at lambda^" +
                         std::to_string(el) + " mu^" + std::to_string(em) + ": " +
                         poly.to_string());
    }
  }
  return coefficients;
}

std::pair<PolyMatrix, PolyMatrix> lax_residuals(int kappa) {
  const LaxTriple lax = build_lax(kappa);
  const int size = lax.size();
  const SystemSpec spec(size, kappa);
  const SkewToeplitz a = structure_matrix(spec);

  PolyMatrix first = subtract(commutator(lax.M, lax.B),
                              commutator(lax.X, matrix_power(lax.M, kappa + 1)));

  // Xdot carries the equations of motion in the slots of X.
  PolyMatrix xdot = poly_matrix(size, size, size);
  for (int i = 0; i < size; ++i) {
    LaurentPolynomial rhs(size);
    for (int j = 0; j < size; ++j) {
      if (a.entry(i, j) == 0) continue;
      Exponents exps(size, 0);
      exps[i] += 1;
      exps[j] += 1;
      rhs += LaurentPolynomial::monomial(size, std::move(exps), Rational(a.entry(i, j)));
    }
    xdot[i][wrap(i - kappa, size)] = std::move(rhs);
  }
  PolyMatrix second = subtract(xdot, commutator(lax.X, lax.B));
  return {std::move(first), std::move(second)};
}

}  // namespace lvint
