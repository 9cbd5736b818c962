#pragma once

#include <string>
#include <vector>

#include "lvint/laurent.hpp"
#include "lvint/poisson.hpp"

namespace lvint {

/// Strictly increasing tuple (m_1, ..., m_{2i+1}) of 1-based variable
/// indices; the members of the combinatorial families behind the polynomial
/// first integrals.
using IndexTuple = std::vector<int>;

enum class EnumMethod {
  inequalities,  // interval-pruned recursion over the defining inequalities
  submatrix,     // brute force: test each principal submatrix pattern
};

/// All index tuples of half-length i for LV(n,k), lexicographically sorted.
/// Empty when i > k.  Both methods return identical sets.
std::vector<IndexTuple> enumerate_index_tuples(const SystemSpec& spec, int i,
                                               EnumMethod method = EnumMethod::inequalities);

/// Closed-form membership test (no enumeration).
bool tuple_in_family(const IndexTuple& tuple, const SystemSpec& spec, int i);

/// The degree-(2i+1) polynomial first integral: the sum of the coefficient-1
/// monomials indexed by enumerate_index_tuples.  i = 0 gives the Hamiltonian
/// x_1 + ... + x_n.
LaurentPolynomial polynomial_integral(const SystemSpec& spec, int i);

/// One rational first integral of LV(m,0): a linear window sum times an
/// invertible monomial.
struct BaseRationalIntegral {
  LaurentPolynomial poly;    // full integral over m variables
  Exponents ratio;           // the monomial cofactor's exponents
  int window_lo = 0;         // 1-based inclusive window of the linear factor
  int window_hi = 0;
};

/// The m-1 rational first integrals of LV(m,0), in the fixed order
///   F_1, F_2, ..., F_{r-1}, (reflections), F_r        (r = floor((m+1)/2)),
/// where the reflected entries start from index 2 when m is odd and from 1
/// when m is even, and the last entry F_r = y_1 + ... + y_m is the
/// Hamiltonian.  Requires m >= 2.
std::vector<BaseRationalIntegral> base_rational_integrals(int m);

/// A rational first integral of LV(n,k): poly = cofactor * (window sum),
/// where the cofactor is an invertible monomial.
struct RationalIntegral {
  LaurentPolynomial poly;
  LaurentPolynomial cofactor;
  int window_lo = 0;  // 1-based inclusive window in x-variables
  int window_hi = 0;
};

/// The n-2k-2 rational first integrals of LV(n,k): pullbacks of the base
/// list (minus its last element, whose pullback equals the top polynomial
/// integral).  Empty when n <= 2k+2.  Requires 2k < n.
std::vector<RationalIntegral> rational_integrals(const SystemSpec& spec);

/// Number of monomials of the i-th polynomial integral containing x_j, for
/// any j with k < j < n-k+1; checked to be independent of the choice of j.
long middle_column_count(const SystemSpec& spec, int i);

/// Constants that cancel the Hamiltonian column block in the independence
/// Jacobian: p[l] = d(H_l)/dx_j at 1 for j <= k (the window length of H_l),
/// q[i] = d(K_i)/dx_j at 1 for middle j.  Requires n > 2k+1.
struct ShiftConstants {
  std::vector<long> p;
  std::vector<long> q;
};
ShiftConstants shift_constants(const SystemSpec& spec);

/// Every first integral of LV(n,k): k+1 polynomial ones and n-2k-2 rational
/// ones, n-k-1 functions in total.
struct IntegralFamily {
  SystemSpec spec;
  std::vector<LaurentPolynomial> polynomial;  // degree 1, 3, ..., 2k+1
  std::vector<RationalIntegral> rational;
  ShiftConstants shifts;  // p empty at the boundary n = 2k+1

  std::vector<std::string> labels() const;  // "K0", ..., "H1", ...
};

IntegralFamily integral_family(const SystemSpec& spec);

}  // namespace lvint
