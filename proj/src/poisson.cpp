#include "lvint/poisson.hpp"

#include <string>

namespace lvint {

SystemSpec::SystemSpec(int n_, int k_) : n(n_), k(k_) {
  if (k < 0 || 2 * k + 1 > n)
    throw std::invalid_argument("SystemSpec: need 0 <= k and 2k+1 <= n, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
}

std::vector<std::vector<int>> SkewToeplitz::dense() const {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = entry(i, j);
  return a;
}

std::string SkewToeplitz::to_text() const {
  std::string out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out += ' ';
      out += std::to_string(entry(i, j));
    }
    out += '\n';
  }
  return out;
}

SkewToeplitz structure_matrix(const SystemSpec& spec) {
  SkewToeplitz a;
  a.n = spec.n;
  a.first_row.assign(spec.n, 0);
  // Off-diagonal sign at offset d = j - i: +1 iff n + i > k + j, i.e. d < n - k.
  for (int d = 1; d < spec.n; ++d) a.first_row[d] = d < spec.n - spec.k ? 1 : -1;
  return a;
}

namespace {

// Exponent pattern shared by the Casimir monomial and the null vector of the
// structure matrix: k ones, then an alternating +1/-1 block of odd length
// n-2k starting and ending at +1, then k ones.  Defined for odd n.
Exponents casimir_exponents(const SystemSpec& spec) {
  Exponents exps(spec.n, 1);
  for (int i = spec.k; i < spec.n - spec.k; ++i)
    exps[i] = (i - spec.k) % 2 == 0 ? 1 : -1;
  return exps;
}

}  // namespace

LaurentPolynomial poisson_bracket(const LaurentPolynomial& f,
                                  const LaurentPolynomial& g,
                                  const SystemSpec& spec) {
  if (f.nvars() != spec.n || g.nvars() != spec.n)
    throw std::invalid_argument("poisson_bracket: variable-count mismatch with spec");
  const SkewToeplitz a = structure_matrix(spec);
  LaurentPolynomial result(spec.n);
  LaurentPolynomial::TermMap accumulated;
  std::vector<long long> weighted(spec.n);
  Exponents sum(spec.n);
  for (const auto& [eg, cg] : g.terms()) {
    // weighted[i] = (A eg)_i, reused across all terms of f.
    for (int i = 0; i < spec.n; ++i) {
      long long acc = 0;
      for (int j = 0; j < spec.n; ++j) acc += static_cast<long long>(a.entry(i, j)) * eg[j];
      weighted[i] = acc;
    }
    for (const auto& [ef, cf] : f.terms()) {
      long long weight = 0;
      for (int i = 0; i < spec.n; ++i) weight += ef[i] * weighted[i];
      if (weight == 0) continue;
      for (int i = 0; i < spec.n; ++i) sum[i] = ef[i] + eg[i];
      Rational coeff = cf * cg;
      coeff *= static_cast<long>(weight);
      auto [it, inserted] = accumulated.emplace(sum, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second == 0) accumulated.erase(it);
      }
    }
  }
  for (const auto& [exps, coeff] : accumulated)
    result += LaurentPolynomial::monomial(spec.n, exps, coeff);
  return result;
}

LaurentPolynomial casimir(const SystemSpec& spec) {
  if (spec.n % 2 == 0)
    throw std::invalid_argument("casimir: the bracket of LV(n,k) has full rank for even n");
  return LaurentPolynomial::monomial(spec.n, casimir_exponents(spec));
}

StructureRank rank_and_null_vector(const SystemSpec& spec) {
  const SkewToeplitz a = structure_matrix(spec);
  RationalMatrix m(spec.n, std::vector<Rational>(spec.n));
  for (int i = 0; i < spec.n; ++i)
    for (int j = 0; j < spec.n; ++j) m[i][j] = a.entry(i, j);
  StructureRank result;
  result.rank = exact_rank(std::move(m));
  if (spec.n % 2 == 1) {
    const Exponents pattern = casimir_exponents(spec);
    std::vector<Rational> v(pattern.begin(), pattern.end());
    for (int i = 0; i < spec.n; ++i) {
      Rational row(0);
      for (int j = 0; j < spec.n; ++j) row += Rational(a.entry(i, j)) * v[j];
      if (row != 0) throw std::logic_error("rank_and_null_vector: pattern is not a null vector");
    }
    result.null_vector = std::move(v);
  }
  return result;
}

LaurentPolynomial phi_pullback(const LaurentPolynomial& f, const SystemSpec& spec) {
  if (spec.k == 0 || 2 * spec.k >= spec.n)
    throw std::invalid_argument("phi_pullback: requires 0 < 2k < n");
  const int m = spec.m();
  if (f.nvars() != m)
    throw std::invalid_argument("phi_pullback: polynomial must be over m = n-2k variables");
  std::vector<Exponents> images(m, Exponents(spec.n, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < spec.k; ++j) {
      images[i][j] = 1;                    // x_1 .. x_k
      images[i][spec.n - 1 - j] = 1;       // x_{n-k+1} .. x_n
    }
    images[i][spec.k + i] = 1;             // x_{i+k}
  }
  return f.substitute_monomials(spec.n, images);
}

LaurentPolynomial psi_reflect(const LaurentPolynomial& f) { return f.reverse_variables(); }

ReducedPolynomial iota_reduce(const LaurentPolynomial& f, int ell, const SystemSpec& src) {
  if (f.nvars() != src.n)
    throw std::invalid_argument("iota_reduce: polynomial width must match the source spec");
  const int n = src.n - 1;  // target dimension
  if (ell < 0 || ell > n)
    throw std::invalid_argument("iota_reduce: position out of range");
  int reduced_k;
  if (src.k == 0) {
    reduced_k = 0;                                   // case (b)
  } else if (ell == n) {
    reduced_k = src.k - 1;                           // case (c)
  } else if (src.k < ell && ell <= n - src.k) {
    reduced_k = src.k;                               // case (a)
  } else {
    throw std::invalid_argument(
        "iota_reduce: no reduced structure is defined for ell=" + std::to_string(ell) +
        " on LV(" + std::to_string(src.n) + "," + std::to_string(src.k) + ")");
  }
  LaurentPolynomial restricted = f.substitute_zero(ell).drop_variable(ell);
  return {std::move(restricted), SystemSpec(n, reduced_k)};
}

std::vector<SystemSpec> reduction_chain(const SystemSpec& spec) {
  std::vector<SystemSpec> chain;
  SystemSpec current = spec;
  while (current.k > 0) {
    current = SystemSpec(current.n - 1, current.k - 1);
    chain.push_back(current);
  }
  return chain;
}

}  // namespace lvint
