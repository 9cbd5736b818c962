#pragma once

#include <optional>
#include <vector>

#include "lvint/laurent.hpp"
#include "lvint/linalg.hpp"

namespace lvint {

/// Identifies the Lotka-Volterra system LV(n,k).  Valid when 0 <= k and
/// 2k+1 <= n; the boundary n = 2k+1 is the cyclic Bogoyavlenskij-Itoh case.
struct SystemSpec {
  int n;
  int k;

  SystemSpec(int n_, int k_);

  int m() const { return n - 2 * k; }
  /// Size of the commuting (Liouville) subset is r + k = floor((n+1)/2).
  int r() const { return (n + 1) / 2 - k; }
  bool boundary() const { return n == 2 * k + 1; }

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

/// Skew-symmetric Toeplitz matrix with entries in {-1, 0, +1}; fully
/// determined by its first row (0, 1, ..., 1, -1, ..., -1) with exactly k
/// trailing -1 entries.
struct SkewToeplitz {
  int n = 0;
  std::vector<int> first_row;  // offsets 0..n-1

  /// 0-based indices.
  int entry(int i, int j) const {
    if (i == j) return 0;
    return i < j ? first_row[j - i] : -first_row[i - j];
  }
  std::vector<std::vector<int>> dense() const;
  /// One row per line, entries -1/0/+1 separated by spaces.
  std::string to_text() const;
};

/// The structure matrix of LV(n,k): entry(i,j) = +1 iff n+i > k+j (1-based
/// i < j), i.e. the first row carries k trailing -1 entries.
SkewToeplitz structure_matrix(const SystemSpec& spec);

/// Diagonal Poisson bracket {x_i,x_j} = A_{ij} x_i x_j extended to Laurent
/// polynomials by derivation.  For monomials x^a, x^b the bracket is
/// (a.A.b) x^{a+b}, so the result is exact and division-free.
LaurentPolynomial poisson_bracket(const LaurentPolynomial& f,
                                  const LaurentPolynomial& g,
                                  const SystemSpec& spec);

/// The Casimir monomial of LV(n,k) for odd n; its exponent vector is
/// (1,..,1, 1,-1,..,-1,1, 1,..,1) with the alternating block in the middle.
LaurentPolynomial casimir(const SystemSpec& spec);

struct StructureRank {
  int rank = 0;
  /// Present exactly when n is odd; satisfies A.v = 0 (checked).
  std::optional<std::vector<Rational>> null_vector;
};

/// Exact rank of the structure matrix over the rationals, with the verified
/// null vector in the odd case.
StructureRank rank_and_null_vector(const SystemSpec& spec);

/// Pullback along phi_k: y_i -> P_k x_{i+k} with P_k = x_1..x_k x_{n-k+1}..x_n.
/// Requires 0 < 2k < n and f over m = n-2k variables.
LaurentPolynomial phi_pullback(const LaurentPolynomial& f, const SystemSpec& spec);

/// Variable reversal x_i -> x_{n+1-i}; an involution and an anti-Poisson map.
LaurentPolynomial psi_reflect(const LaurentPolynomial& f);

struct ReducedPolynomial {
  LaurentPolynomial poly;
  SystemSpec spec;
};

/// Restriction to the Poisson submanifold {x_{ell+1} = 0} of LV(src),
/// renumbering the remaining variables.  Supported cases (target dimension
/// n = src.n - 1): (a) k < ell <= n-k, (b) k = 0 with any ell in [0, n],
/// (c) ell = n and k > 0, which lowers k by one.  Terms with a pole on the
/// deleted hyperplane are rejected.
ReducedPolynomial iota_reduce(const LaurentPolynomial& f, int ell, const SystemSpec& src);

/// Specs obtained from `spec` by repeatedly deleting the last variable
/// (case (c)) until k reaches 0: (n-1,k-1), (n-2,k-2), ..., (n-k, 0).
std::vector<SystemSpec> reduction_chain(const SystemSpec& spec);

}  // namespace lvint
