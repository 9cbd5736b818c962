#pragma once

#include <random>
#include <vector>

#include "lvint/laurent.hpp"
#include "lvint/poisson.hpp"
#include "lvint/rng.hpp"

namespace lvint::testing {

inline LaurentPolynomial random_poly(std::mt19937_64& gen, int nvars, int max_terms = 4,
                                     int max_degree = 3) {
  LaurentPolynomial poly(nvars);
  const long terms = rng_int(gen, 1, max_terms);
  for (long t = 0; t < terms; ++t) {
    Exponents exps(nvars);
    for (int i = 0; i < nvars; ++i)
      exps[i] = static_cast<int>(rng_int(gen, -max_degree, max_degree));
    Rational coeff = rng_rational(gen);
    if (coeff == 0) coeff = 1;
    poly += LaurentPolynomial::monomial(nvars, std::move(exps), coeff);
  }
  return poly;
}

// Independent product oracle on flat term lists (no map canonicalization).
using FlatPoly = std::vector<std::pair<Exponents, Rational>>;

inline FlatPoly flat(const LaurentPolynomial& poly) {
  FlatPoly list;
  for (const auto& [exps, coeff] : poly.terms()) list.emplace_back(exps, coeff);
  return list;
}

inline LaurentPolynomial unflatten(int nvars, const FlatPoly& list) {
  LaurentPolynomial poly(nvars);
  for (const auto& [exps, coeff] : list)
    poly += LaurentPolynomial::monomial(nvars, exps, coeff);
  return poly;
}

inline LaurentPolynomial brute_force_product(const LaurentPolynomial& a,
                                             const LaurentPolynomial& b) {
  FlatPoly out;
  for (const auto& [ea, ca] : flat(a)) {
    for (const auto& [eb, cb] : flat(b)) {
      Exponents sum(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i) sum[i] = ea[i] + eb[i];
      out.emplace_back(std::move(sum), ca * cb);
    }
  }
  return unflatten(a.nvars(), out);
}

// Bracket by the derivation rule, an independent route from the production
// monomial-pair formula:
//   {f,g} = sum_{i<j} A_ij x_i x_j (df/dx_i dg/dx_j - df/dx_j dg/dx_i).
inline LaurentPolynomial derivation_bracket(const LaurentPolynomial& f,
                                            const LaurentPolynomial& g,
                                            const SystemSpec& spec) {
  const SkewToeplitz a = structure_matrix(spec);
  LaurentPolynomial result(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    for (int j = i + 1; j < spec.n; ++j) {
      if (a.entry(i, j) == 0) continue;
      Exponents e(spec.n, 0);
      e[i] += 1;
      e[j] += 1;
      const LaurentPolynomial xixj =
          LaurentPolynomial::monomial(spec.n, std::move(e), Rational(a.entry(i, j)));
      result += xixj * (f.partial_derivative(i) * g.partial_derivative(j) -
                        f.partial_derivative(j) * g.partial_derivative(i));
    }
  }
  return result;
}

// Characteristic polynomial coefficients of a real matrix by the
// Faddeev-LeVerrier recursion: det(tI - A) = t^n + c_{n-1} t^{n-1} + ... + c_0.
inline std::vector<double> faddeev_leverrier(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> m = a;  // M_1 = A
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  for (std::size_t step = 1; step <= n; ++step) {
    if (step > 1) {
      // M_step = A (M_{step-1} + c_{n-step+1} I)
      std::vector<std::vector<double>> shifted = m;
      for (std::size_t i = 0; i < n; ++i) shifted[i][i] += c[n - step + 1];
      std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t)
          for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][t] * shifted[t][j];
      m = std::move(next);
    }
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += m[i][i];
    c[n - step] = -trace / static_cast<double>(step);
  }
  return c;
}

}  // namespace lvint::testing
