#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lvint/poisson.hpp"

using namespace lvint;
using testing::derivation_bracket;
using testing::random_poly;

TEST_SUITE_BEGIN("poisson");

TEST_CASE("structure matrix first row and entries") {
  CHECK(structure_matrix(SystemSpec(5, 2)).first_row == std::vector<int>{0, 1, 1, -1, -1});

  const SkewToeplitz a41 = structure_matrix(SystemSpec(4, 1));
  const std::vector<std::vector<int>> expected{
      {0, 1, 1, -1}, {-1, 0, 1, 1}, {-1, -1, 0, 1}, {1, -1, -1, 0}};
  CHECK(a41.dense() == expected);

  const SkewToeplitz a30 = structure_matrix(SystemSpec(3, 0));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(a30.entry(i, j) == 1);

  CHECK(a30.to_text() == "0 1 1\n-1 0 1\n-1 -1 0\n");
}

TEST_CASE("spec validation and derived constants") {
  CHECK_THROWS_AS(SystemSpec(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(SystemSpec(3, -1), std::invalid_argument);
  const SystemSpec spec(9, 2);
  CHECK(spec.m() == 5);
  CHECK(spec.r() == 3);
  CHECK(SystemSpec(5, 2).boundary());
}

TEST_CASE("bracket basics") {
  const SystemSpec spec(5, 2);
  const auto x1 = LaurentPolynomial::variable(5, 0);
  const auto x2 = LaurentPolynomial::variable(5, 1);
  CHECK(poisson_bracket(x1, x2, spec) == LaurentPolynomial::monomial(5, {1, 1, 0, 0, 0}));

  std::mt19937_64 gen(31);
  const auto f = random_poly(gen, 5);
  CHECK(poisson_bracket(f, f, spec).is_zero());

  const SystemSpec odd(5, 1);
  const auto c = casimir(odd);
  for (int i = 0; i < 5; ++i)
    CHECK(poisson_bracket(LaurentPolynomial::variable(5, i), c, odd).is_zero());

  CHECK_THROWS_AS(poisson_bracket(x1, LaurentPolynomial::variable(4, 0), spec),
                  std::invalid_argument);
}

TEST_CASE("bracket agrees with the derivation rule") {
  std::mt19937_64 gen(513);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng_int(gen, 3, 7));
    const SystemSpec spec(n, static_cast<int>(rng_int(gen, 0, (n - 1) / 2)));
    const auto f = random_poly(gen, n);
    const auto g = random_poly(gen, n);
    REQUIRE(poisson_bracket(f, g, spec) == derivation_bracket(f, g, spec));
  }
}

TEST_CASE("bracket satisfies the Jacobi identity") {
  std::mt19937_64 gen(6021);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng_int(gen, 3, 7));
    const SystemSpec spec(n, static_cast<int>(rng_int(gen, 0, (n - 1) / 2)));
    const auto f = random_poly(gen, n, 1);
    const auto g = random_poly(gen, n, 1);
    const auto h = random_poly(gen, n, 1);
    const auto cyclic = poisson_bracket(f, poisson_bracket(g, h, spec), spec) +
                        poisson_bracket(g, poisson_bracket(h, f, spec), spec) +
                        poisson_bracket(h, poisson_bracket(f, g, spec), spec);
    REQUIRE(cyclic.is_zero());
  }
}

TEST_CASE("casimir monomials") {
  CHECK(casimir(SystemSpec(5, 1)) == LaurentPolynomial::monomial(5, {1, 1, -1, 1, 1}));
  CHECK(casimir(SystemSpec(3, 0)) == LaurentPolynomial::monomial(3, {1, -1, 1}));
  CHECK(casimir(SystemSpec(7, 1)) ==
        LaurentPolynomial::monomial(7, {1, 1, -1, 1, -1, 1, 1}));
  CHECK_THROWS_AS(casimir(SystemSpec(6, 2)), std::invalid_argument);
}

TEST_CASE("casimir brackets vanish for all odd n up to 11") {
  for (int n = 3; n <= 11; n += 2) {
    for (int k = 0; 2 * k + 1 <= n; ++k) {
      const SystemSpec spec(n, k);
      const auto c = casimir(spec);
      for (int i = 0; i < n; ++i)
        REQUIRE(poisson_bracket(LaurentPolynomial::variable(n, i), c, spec).is_zero());
    }
  }
}

TEST_CASE("structure rank and null vector") {
  CHECK(rank_and_null_vector(SystemSpec(6, 2)).rank == 6);
  CHECK_FALSE(rank_and_null_vector(SystemSpec(6, 2)).null_vector.has_value());

  const auto r51 = rank_and_null_vector(SystemSpec(5, 1));
  CHECK(r51.rank == 4);
  CHECK(r51.null_vector ==
        std::vector<Rational>{Rational(1), Rational(1), Rational(-1), Rational(1), Rational(1)});

  const auto r30 = rank_and_null_vector(SystemSpec(3, 0));
  CHECK(r30.rank == 2);
  CHECK(r30.null_vector == std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});

  for (int n = 3; n <= 12; ++n)
    for (int k = 0; 2 * k + 1 <= n; ++k)
      REQUIRE(rank_and_null_vector(SystemSpec(n, k)).rank == n - n % 2);
}

TEST_CASE("pullback examples") {
  const SystemSpec spec(5, 1);
  const auto f = LaurentPolynomial::monomial(3, {1, -1, 1});  // y1 y3 / y2
  CHECK(phi_pullback(f, spec) == LaurentPolynomial::monomial(5, {1, 1, -1, 1, 1}));

  LaurentPolynomial sum(3);
  for (int i = 0; i < 3; ++i) sum += LaurentPolynomial::variable(3, i);
  LaurentPolynomial expected(5);
  for (int middle = 1; middle <= 3; ++middle) {
    Exponents e(5, 0);
    e[0] = e[4] = 1;
    e[middle] = 1;
    expected += LaurentPolynomial::monomial(5, std::move(e));
  }
  CHECK(phi_pullback(sum, spec) == expected);

  CHECK(phi_pullback(LaurentPolynomial::constant(3, 1), spec) ==
        LaurentPolynomial::constant(5, 1));
  CHECK_THROWS_AS(phi_pullback(LaurentPolynomial::constant(5, 1), SystemSpec(5, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(phi_pullback(LaurentPolynomial::constant(2, 1), SystemSpec(5, 1)),
                  std::invalid_argument);
}

TEST_CASE("pullback preserves brackets for every desk-scale system") {
  for (int n = 3; n <= 9; ++n) {
    for (int k = 1; 2 * k + 1 <= n; ++k) {
      const SystemSpec spec(n, k);
      if (spec.boundary()) continue;
      const int m = spec.m();
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
          const auto yi = LaurentPolynomial::variable(m, i);
          const auto yj = LaurentPolynomial::variable(m, j);
          const auto lhs =
              poisson_bracket(phi_pullback(yi, spec), phi_pullback(yj, spec), spec);
          REQUIRE(lhs == phi_pullback(yi * yj, spec));
        }
      }
    }
  }
}

TEST_CASE("reflection is an anti-Poisson involution") {
  CHECK(psi_reflect(LaurentPolynomial::variable(3, 0)) == LaurentPolynomial::variable(3, 2));

  LaurentPolynomial h(4);
  for (int i = 0; i < 4; ++i) h += LaurentPolynomial::variable(4, i);
  CHECK(psi_reflect(h) == h);

  // Reflecting the first rational integral of LV(5,0) gives the second kind.
  const auto f1 = LaurentPolynomial::monomial(5, {1, -1, 1, -1, 1});
  CHECK(psi_reflect(f1) == f1);
  const auto f2 = (LaurentPolynomial::variable(5, 0) + LaurentPolynomial::variable(5, 1) +
                   LaurentPolynomial::variable(5, 2)) *
                  LaurentPolynomial::monomial(5, {0, 0, 0, -1, 1});
  const auto g2 = (LaurentPolynomial::variable(5, 4) + LaurentPolynomial::variable(5, 3) +
                   LaurentPolynomial::variable(5, 2)) *
                  LaurentPolynomial::monomial(5, {1, -1, 0, 0, 0});
  CHECK(psi_reflect(f2) == g2);

  std::mt19937_64 gen(8080);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng_int(gen, 3, 7));
    const SystemSpec spec(n, static_cast<int>(rng_int(gen, 0, (n - 1) / 2)));
    const auto f = random_poly(gen, n);
    const auto g = random_poly(gen, n);
    REQUIRE(psi_reflect(psi_reflect(f)) == f);
    REQUIRE((poisson_bracket(psi_reflect(f), psi_reflect(g), spec) +
             psi_reflect(poisson_bracket(f, g, spec)))
                .is_zero());
  }
}

TEST_CASE("restriction to a coordinate hyperplane") {
  // Dropping the last variable of LV(5,2) restricts the cubic integral of
  // LV(5,2) to that of LV(4,1).
  LaurentPolynomial k1_52(5);
  for (const Exponents& e : {Exponents{1, 1, 0, 1, 0}, Exponents{1, 0, 1, 1, 0},
                             Exponents{1, 0, 1, 0, 1}, Exponents{0, 1, 1, 0, 1},
                             Exponents{0, 1, 0, 1, 1}})
    k1_52 += LaurentPolynomial::monomial(5, e);
  const ReducedPolynomial reduced = iota_reduce(k1_52, 4, SystemSpec(5, 2));
  CHECK(reduced.spec == SystemSpec(4, 1));
  LaurentPolynomial k1_41(4);
  k1_41 += LaurentPolynomial::monomial(4, {1, 1, 0, 1});
  k1_41 += LaurentPolynomial::monomial(4, {1, 0, 1, 1});
  CHECK(reduced.poly == k1_41);

  // The linear Hamiltonian just loses one variable, at any admissible slot.
  LaurentPolynomial h6(6);
  for (int i = 0; i < 6; ++i) h6 += LaurentPolynomial::variable(6, i);
  LaurentPolynomial h5(5);
  for (int i = 0; i < 5; ++i) h5 += LaurentPolynomial::variable(5, i);
  const ReducedPolynomial mid = iota_reduce(h6, 3, SystemSpec(6, 1));
  CHECK(mid.poly == h5);
  CHECK(mid.spec == SystemSpec(5, 1));

  // Chain from LV(9,4) down to LV(5,0).
  const std::vector<SystemSpec> chain = reduction_chain(SystemSpec(9, 4));
  CHECK(chain == std::vector<SystemSpec>{SystemSpec(8, 3), SystemSpec(7, 2), SystemSpec(6, 1),
                                         SystemSpec(5, 0)});

  // Poles on the deleted hyperplane and unsupported positions are rejected.
  CHECK_THROWS_AS(iota_reduce(LaurentPolynomial::monomial(5, {1, 1, -1, 1, 1}), 2,
                              SystemSpec(5, 1)),
                  domain_error);
  CHECK_THROWS_AS(iota_reduce(h6, 1, SystemSpec(6, 2)), std::invalid_argument);
}

TEST_SUITE_END();
