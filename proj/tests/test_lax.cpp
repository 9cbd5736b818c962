#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lvint/dynamics.hpp"
#include "lvint/lax.hpp"

using namespace lvint;

TEST_SUITE_BEGIN("lax");

TEST_CASE("matrix layout for the smallest system") {
  const LaxTriple lax = build_lax(1);
  REQUIRE(lax.size() == 3);
  CHECK(lax.X[0][2] == LaurentPolynomial::variable(3, 0));
  CHECK(lax.X[1][0] == LaurentPolynomial::variable(3, 1));
  CHECK(lax.X[2][1] == LaurentPolynomial::variable(3, 2));
  CHECK(lax.B[0][0] ==
        -(LaurentPolynomial::variable(3, 0) + LaurentPolynomial::variable(3, 1)));
  CHECK(lax.M[2][0] == LaurentPolynomial::constant(3, 1));
  CHECK_THROWS_AS(build_lax(0), std::invalid_argument);
}

TEST_CASE("the shift matrix has cyclic order 2*kappa+1") {
  for (int kappa = 1; kappa <= 3; ++kappa) {
    const LaxTriple lax = build_lax(kappa);
    const int size = lax.size();
    const PolyMatrix power = matrix_power(lax.M, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        REQUIRE(power[i][j] == (i == j ? LaurentPolynomial::constant(size, 1)
                                       : LaurentPolynomial(size)));
  }
}

TEST_CASE("characteristic determinant for kappa = 1, expanded by hand") {
  // det of [[-mu, lambda, x1], [x2, -mu, lambda], [lambda, x3, -mu]]
  // = lambda^3 - mu^3 + (x1+x2+x3) lambda mu + x1 x2 x3.
  LaurentPolynomial expected(5);
  expected += LaurentPolynomial::monomial(5, {0, 0, 0, 3, 0});
  expected -= LaurentPolynomial::monomial(5, {0, 0, 0, 0, 3});
  for (int i = 0; i < 3; ++i) {
    Exponents e(5, 0);
    e[i] = 1;
    e[3] = e[4] = 1;
    expected += LaurentPolynomial::monomial(5, std::move(e));
  }
  expected += LaurentPolynomial::monomial(5, {1, 1, 1, 0, 0});
  CHECK(characteristic_polynomial(1) == expected);

  const auto coefficients = characteristic_coefficients(1);
  REQUIRE(coefficients.size() == 2);
  CHECK(coefficients[0] == polynomial_integral(SystemSpec(3, 1), 0));
  CHECK(coefficients[1] == LaurentPolynomial::monomial(3, {1, 1, 1}));
}

TEST_CASE("spectral coefficients equal the combinatorial integrals") {
  for (int kappa = 1; kappa <= 4; ++kappa) {
    for (int tail = 0; tail <= kappa; ++tail) {
      const int n = 2 * kappa + 1 - tail;
      const SystemSpec reduced(n, kappa - tail);
      const auto coefficients = characteristic_coefficients(kappa, tail);
      REQUIRE(coefficients.size() == static_cast<std::size_t>(kappa + 1));
      for (int i = 0; i <= kappa; ++i) {
        if (i <= kappa - tail)
          REQUIRE(coefficients[i] == polynomial_integral(reduced, i));
        else
          REQUIRE(coefficients[i].is_zero());
      }
    }
  }
  CHECK_THROWS_AS(characteristic_coefficients(2, 3), std::invalid_argument);
}

TEST_CASE("both Lax residuals vanish identically") {
  for (int kappa = 1; kappa <= 3; ++kappa) {
    const auto [first, second] = lax_residuals(kappa);
    REQUIRE(is_zero(first));
    REQUIRE(is_zero(second));
  }
}

TEST_CASE("spectrum is numerically invariant along the flow") {
  const int kappa = 2;
  const int size = 2 * kappa + 1;
  const SystemSpec spec(size, kappa);
  std::mt19937_64 gen(321);
  std::vector<double> x0;
  for (int i = 0; i < size; ++i) x0.push_back(rng_uniform(gen, 0.5, 1.5));
  const double lambda = rng_uniform(gen, 0.3, 1.7);
  const TrajectoryRecord record = integrate(spec, x0, 10.0, 1e-12);

  auto spectral_coefficients = [&](const std::vector<double>& state) {
    std::vector<std::vector<double>> m(size, std::vector<double>(size, 0.0));
    for (int i = 0; i < size; ++i) {
      m[i][((i - kappa) % size + size) % size] += state[i];
      m[i][(i + 1) % size] += lambda;
    }
    return testing::faddeev_leverrier(m);
  };
  const auto reference = spectral_coefficients(record.states.front());
  for (std::size_t s = 0; s < record.states.size(); s += 10) {
    const auto current = spectral_coefficients(record.states[s]);
    for (std::size_t c = 0; c < reference.size(); ++c)
      REQUIRE(std::abs(current[c] - reference[c]) <= 1e-7 * std::max(1.0, std::abs(reference[c])));
  }
}

TEST_SUITE_END();
