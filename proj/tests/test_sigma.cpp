#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "lvint/sigma.hpp"

using namespace lvint;

namespace {

// sigma by definition over an arbitrary ambient dimension n >= 2k+1: erase
// the middle of every family tuple and count hats whose head contains j.
long hat_count(int n, int k, int i, int j) {
  std::set<IndexTuple> hats;
  for (const IndexTuple& t : enumerate_index_tuples(SystemSpec(n, k), i)) {
    IndexTuple hat(t);
    hat.erase(hat.begin() + i);
    hats.insert(std::move(hat));
  }
  long count = 0;
  for (const IndexTuple& hat : hats)
    for (int s = 0; s < i; ++s)
      if (hat[s] == j) ++count;
  return count;
}

long derivative_count(const SystemSpec& spec, int i, int j) {
  const std::vector<Rational> ones(spec.n, Rational(1));
  const Rational value =
      polynomial_integral(spec, i).partial_derivative(j - 1).evaluate(ones);
  return value.get_num().get_si();
}

}  // namespace

TEST_SUITE_BEGIN("sigma");

TEST_CASE("frozen sigma values") {
  CHECK(sigma_count(3, 2, 1) == 4);  // binomial(4,3)
  CHECK(sigma_count(3, 2, 2) == 3);  // weighted pairs (1,2) and (2,3): 2+1
  for (int k = 1; k <= 6; ++k)
    for (int j = 1; j <= k; ++j) CHECK(sigma_count(k, k, j) == 1);

  const SigmaTable k2 = sigma_table(2);
  CHECK(k2.values == std::vector<std::vector<long>>{{2, 1}, {1, 1}});

  const SigmaTable k3 = sigma_table(3);
  CHECK(k3.values[1] == std::vector<long>{4, 3, 3});

  CHECK_THROWS_AS(sigma_count(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sigma_count(3, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(sigma_count(3, 2, 2, SigmaMethod::closed_row1), std::invalid_argument);
}

TEST_CASE("three-way method agreement up to k = 8") {
  for (int k = 1; k <= 8; ++k) {
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        const long weighted = sigma_count(k, i, j, SigmaMethod::weighted_sum);
        REQUIRE(weighted == sigma_count(k, i, j, SigmaMethod::brute));
        if (j == 1) REQUIRE(weighted == sigma_count(k, i, 1, SigmaMethod::closed_row1));
      }
    }
  }
}

TEST_CASE("identity report is clean for k up to 8") {
  for (int k = 2; k <= 8; ++k) {
    const VerificationReport report = check_sigma_identities(k);
    if (!report.passed()) FAIL(report.to_text());
  }
  CHECK_THROWS_AS(check_sigma_identities(1), std::invalid_argument);
}

TEST_CASE("middle-preserving lift") {
  CHECK(rho_lift({1, 2, 5}, SystemSpec(5, 1)) == IndexTuple{1, 2, 6});
  CHECK_THROWS_AS(rho_lift({1, 2, 3}, SystemSpec(5, 1)), std::invalid_argument);

  // The lift is injective into the bigger family, and the induced map on
  // middle-erased tuples is a bijection: counts agree for every n.
  for (int k = 1; k <= 4; ++k) {
    for (int n = 2 * k + 1; n <= 9; ++n) {
      const SystemSpec source(n, k);
      const SystemSpec target(n + 1, k);
      for (int i = 1; i <= k; ++i) {
        std::set<IndexTuple> lifted;
        for (const IndexTuple& t : enumerate_index_tuples(source, i))
          lifted.insert(rho_lift(t, source));
        for (const IndexTuple& t : lifted)
          REQUIRE(tuple_in_family(t, target, i));
        for (int j = 1; j <= k; ++j)
          REQUIRE(hat_count(n, k, i, j) == sigma_count(k, i, j));
      }
    }
  }
}

TEST_CASE("column counts match exact derivatives and their differences") {
  // The (i,j) entry of the derivative matrix counts family tuples containing
  // j, and consecutive ambient dimensions differ by sigma.
  for (int n = 4; n <= 9; ++n) {
    for (int k = 1; 2 * k + 1 <= n - 1; ++k) {
      const SystemSpec big(n, k);
      const SystemSpec small(n - 1, k);
      for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
          long direct = 0;
          for (const IndexTuple& t : enumerate_index_tuples(big, i)) {
            bool contains = false;
            for (int s = 0; s <= i; ++s)
              if (t[s] == j) contains = true;
            if (contains) ++direct;
          }
          REQUIRE(direct == derivative_count(big, i, j));
          REQUIRE(derivative_count(big, i, j) - derivative_count(small, i, j) ==
                  sigma_count(k, i, j));
        }
      }
    }
  }
}

TEST_SUITE_END();
