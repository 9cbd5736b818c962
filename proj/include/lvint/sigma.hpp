#pragma once

#include <vector>

#include "lvint/integrals.hpp"
#include "lvint/report.hpp"

namespace lvint {

enum class SigmaMethod {
  brute,         // enumerate the middle-erased tuple family and count
  weighted_sum,  // sum of consecutive-gap products over i-subsets of [1,k]
  closed_row1,   // binomial(k+i-1, 2i-1); only valid for j = 1
};

/// The count sigma^{(k)}_{i,j} of middle-erased tuples of the cyclic system
/// LV(2k+1,k) whose first i entries contain j.  1 <= i, j <= k.
long sigma_count(int k, int i, int j, SigmaMethod method = SigmaMethod::weighted_sum);

/// k x k table of sigma values; rows are non-increasing with a plateau of
/// exactly i equal middle entries in row i.
struct SigmaTable {
  int k = 0;
  std::vector<std::vector<long>> values;  // values[i-1][j-1]
};
SigmaTable sigma_table(int k, SigmaMethod method = SigmaMethod::weighted_sum);

/// Verifies, for all (i,j) in range: agreement of the counting methods, the
/// two recurrence relations, the gap product formula with its parity-split
/// binomial forms, and the plateau rule.  Requires k >= 2.
VerificationReport check_sigma_identities(int k);

/// Middle-preserving lift from the tuple family of LV(n-1,k) into that of
/// LV(n,k): the entries after the middle are shifted up by one.  Membership
/// of input and output is checked.
IndexTuple rho_lift(const IndexTuple& tuple, const SystemSpec& source);

}  // namespace lvint
