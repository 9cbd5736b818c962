#include "lvint/sigma.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace lvint {

namespace {

// sigma with the natural zero extension for i > k (no i-subsets of [1,k])
// so that recurrence right-hand sides can be evaluated uniformly.
long weighted_sum_extended(int k, int i, int j) {
  if (i > k || j > k) return 0;
  long total = 0;
  std::vector<int> subset(i);
  std::function<void(int, int)> fill = [&](int pos, int lo) {
    if (pos == i) {
      if (!std::binary_search(subset.begin(), subset.end(), j)) return;
      long product = 1;
      for (int s = 0; s + 1 < i; ++s) product *= subset[s + 1] - subset[s];
      product *= k + 1 - subset[i - 1];
      total += product;
      return;
    }
    for (int v = lo; v <= k - (i - pos - 1); ++v) {
      subset[pos] = v;
      fill(pos + 1, v + 1);
    }
  };
  fill(0, 1);
  return total;
}

// Erase the middle entry of every family tuple of LV(2k+1,k), deduplicate,
// and count those whose first i entries contain j.
long brute_count(int k, int i, int j) {
  const SystemSpec spec(2 * k + 1, k);
  std::set<IndexTuple> erased;
  for (const IndexTuple& t : enumerate_index_tuples(spec, i)) {
    IndexTuple hat(t);
    hat.erase(hat.begin() + i);
    erased.insert(std::move(hat));
  }
  long count = 0;
  for (const IndexTuple& hat : erased) {
    bool contains = false;
    for (int s = 0; s < i; ++s)
      if (hat[s] == j) contains = true;
    if (contains) ++count;
  }
  return count;
}

std::string triple_id(const char* what, int k, int i, int j) {
  std::ostringstream out;
  out << what << "(k=" << k << ",i=" << i << ",j=" << j << ")";
  return out.str();
}

}  // namespace

long sigma_count(int k, int i, int j, SigmaMethod method) {
  if (k < 1 || i < 1 || i > k || j < 1 || j > k)
    throw std::invalid_argument("sigma_count: indices out of range");
  switch (method) {
    case SigmaMethod::brute: return brute_count(k, i, j);
    case SigmaMethod::weighted_sum: return weighted_sum_extended(k, i, j);
    case SigmaMethod::closed_row1:
      if (j != 1) throw std::invalid_argument("sigma_count: closed_row1 requires j = 1");
      return static_cast<long>(binomial(k + i - 1, 2 * i - 1));
  }
  throw std::invalid_argument("sigma_count: unknown method");
}

SigmaTable sigma_table(int k, SigmaMethod method) {
  if (k < 1) throw std::invalid_argument("sigma_table: requires k >= 1");
  SigmaTable table;
  table.k = k;
  table.values.assign(k, std::vector<long>(k, 0));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) table.values[i - 1][j - 1] = sigma_count(k, i, j, method);
  return table;
}

VerificationReport check_sigma_identities(int k) {
  if (k < 2) throw std::invalid_argument("check_sigma_identities: requires k >= 2");
  VerificationReport report;
  report.suite = "sigma";
  report.n = 2 * k + 1;
  report.k = k;

  const SigmaTable table = sigma_table(k, SigmaMethod::weighted_sum);
  auto sigma = [&](int kk, int i, int j) { return weighted_sum_extended(kk, i, j); };

  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      const long value = table.values[i - 1][j - 1];
      {
        const long brute = brute_count(k, i, j);
        report.add(triple_id("brute=weighted", k, i, j), brute == value,
                   std::to_string(brute) + " vs " + std::to_string(value));
      }
      if (j == 1) {
        const long closed = static_cast<long>(binomial(k + i - 1, 2 * i - 1));
        report.add(triple_id("row1_binomial", k, i, j), closed == value,
                   std::to_string(closed) + " vs " + std::to_string(value));
      }
    }
  }

  // First recurrence: sigma^{(k)}_{i,1} = sum_t t * sigma^{(k-t)}_{i-1,1}.
  for (int i = 2; i <= k; ++i) {
    long rhs = 0;
    for (int t = 1; t <= k - i + 1; ++t) rhs += t * sigma(k - t, i - 1, 1);
    report.add(triple_id("recurrence_column1", k, i, 1), rhs == table.values[i - 1][0],
               std::to_string(rhs) + " vs " + std::to_string(table.values[i - 1][0]));
  }

  // Second recurrence:
  // sigma^{(k)}_{i,j} = sigma^{(k-1)}_{i,j-1} + sum_t sigma^{(k-t)}_{i-1,j-t}.
  for (int i = 2; i <= k; ++i) {
    for (int j = 2; j <= k; ++j) {
      long rhs = sigma(k - 1, i, j - 1);
      for (int t = 1; t <= j - 1; ++t) rhs += sigma(k - t, i - 1, j - t);
      report.add(triple_id("recurrence_general", k, i, j), rhs == table.values[i - 1][j - 1],
                 std::to_string(rhs) + " vs " + std::to_string(table.values[i - 1][j - 1]));
    }
  }

  // Row differences: gap product formula and its binomial restatements.
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j < k; ++j) {
      const long difference = table.values[i - 1][j - 1] - table.values[i - 1][j];
      Rational product(1);
      for (int s = 1 - i; s <= i - 2; ++s) product *= Rational(2 * j - k + s);
      for (int f = 2; f <= 2 * i - 2; ++f) product /= Rational(f);
      // Empty product (i = 1) is 1 by definition.
      const bool product_ok = product.get_den() == 1 && product == Rational(difference);
      report.add(triple_id("difference_product", k, i, j), product_ok,
                 product.get_str() + " vs " + std::to_string(difference));

      const int a = 2 * j - k + i - 2;
      const long split = a >= 0 ? binomial(a, 2 * i - 2)
                                : binomial(-2 * j + k + i - 1, 2 * i - 2);
      report.add(triple_id("difference_binomial", k, i, j), split == difference,
                 std::to_string(split) + " vs " + std::to_string(difference));

      // Plateau rule: the difference vanishes exactly in the middle window.
      const bool inside = (k - i + 3) / 2 <= j && j < (k + i + 1) / 2;
      report.add(triple_id("plateau", k, i, j), (difference == 0) == inside,
                 "difference " + std::to_string(difference) +
                     (inside ? " inside" : " outside") + " the plateau window");
      report.add(triple_id("monotone", k, i, j), difference >= 0,
                 "negative difference " + std::to_string(difference));
    }
    report.add(triple_id("row_k_constant", k, k, i), table.values[k - 1][i - 1] == 1,
               std::to_string(table.values[k - 1][i - 1]));
    report.add(triple_id("row_1_linear", k, 1, i), table.values[0][i - 1] == k - i + 1,
               std::to_string(table.values[0][i - 1]));
  }

  return report;
}

IndexTuple rho_lift(const IndexTuple& tuple, const SystemSpec& source) {
  const int i = (static_cast<int>(tuple.size()) - 1) / 2;
  if (static_cast<int>(tuple.size()) != 2 * i + 1 || i < 0)
    throw std::invalid_argument("rho_lift: tuple must have odd length");
  if (!tuple_in_family(tuple, source, i))
    throw std::invalid_argument("rho_lift: tuple is not a family member of the source");
  IndexTuple lifted(tuple);
  for (int s = i + 1; s <= 2 * i; ++s) lifted[s] += 1;
  const SystemSpec target(source.n + 1, source.k);
  if (!tuple_in_family(lifted, target, i))
    throw std::logic_error("rho_lift: lifted tuple left the target family");
  return lifted;
}

}  // namespace lvint
