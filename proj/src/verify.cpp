#include "lvint/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "lvint/dynamics.hpp"
#include "lvint/linalg.hpp"

namespace lvint {

namespace {

std::string bracket_id(const std::string& a, const std::string& b) {
  return "{" + a + "," + b + "}";
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<Rational> random_positive_point(std::mt19937_64& gen, int n) {
  std::vector<Rational> point;
  point.reserve(n);
  for (int i = 0; i < n; ++i) point.push_back(rng_positive_rational(gen));
  return point;
}

// Jacobian of the given functions with respect to the first `cols` variables,
// evaluated exactly at `point`.
RationalMatrix jacobian_at(const std::vector<const LaurentPolynomial*>& functions,
                           std::span<const Rational> point, int cols) {
  RationalMatrix j(functions.size(), std::vector<Rational>(cols));
  for (std::size_t r = 0; r < functions.size(); ++r)
    for (int c = 0; c < cols; ++c)
      j[r][c] = functions[r]->partial_derivative(c).evaluate(point);
  return j;
}

}  // namespace

VerificationReport involution_suite(const SystemSpec& spec) {
  Stopwatch timer;
  VerificationReport report;
  report.suite = "involution";
  report.n = spec.n;
  report.k = spec.k;

  const IntegralFamily family = integral_family(spec);
  const auto& polys = family.polynomial;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      const LaurentPolynomial b = poisson_bracket(polys[i], polys[j], spec);
      report.add(bracket_id("K" + std::to_string(i), "K" + std::to_string(j)), b.is_zero(),
                 b.to_string());
    }
  }
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t l = 0; l < family.rational.size(); ++l) {
      const LaurentPolynomial b = poisson_bracket(polys[i], family.rational[l].poly, spec);
      report.add(bracket_id("K" + std::to_string(i), "H" + std::to_string(l + 1)), b.is_zero(),
                 b.to_string());
    }
  }
  // Only the first r-1 rational integrals are pairwise in involution.
  const std::size_t commuting = spec.r() >= 1 ? static_cast<std::size_t>(spec.r() - 1) : 0;
  for (std::size_t a = 0; a < commuting && a < family.rational.size(); ++a) {
    for (std::size_t b = a + 1; b < commuting && b < family.rational.size(); ++b) {
      const LaurentPolynomial value =
          poisson_bracket(family.rational[a].poly, family.rational[b].poly, spec);
      report.add(bracket_id("H" + std::to_string(a + 1), "H" + std::to_string(b + 1)),
                 value.is_zero(), value.to_string());
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport independence_suite(const SystemSpec& spec, std::uint64_t seed) {
  if (spec.boundary())
    throw std::invalid_argument("independence_suite: requires n > 2k+1");
  Stopwatch timer;
  VerificationReport report;
  report.suite = "independence";
  report.n = spec.n;
  report.k = spec.k;

  const IntegralFamily family = integral_family(spec);
  const LaurentPolynomial& hamiltonian = family.polynomial[0];
  const int rationals = static_cast<int>(family.rational.size());
  const int rows = spec.n - spec.k - 1;
  const int cols = spec.n - spec.k;

  // Shifted functions: H_l - p_l H, then H, then K_i - q_i H.
  std::vector<LaurentPolynomial> shifted;
  shifted.reserve(rows);
  for (int l = 0; l < rationals; ++l)
    shifted.push_back(family.rational[l].poly - Rational(family.shifts.p[l]) * hamiltonian);
  shifted.push_back(hamiltonian);
  for (int i = 1; i <= spec.k; ++i)
    shifted.push_back(family.polynomial[i] - Rational(family.shifts.q[i - 1]) * hamiltonian);

  std::vector<const LaurentPolynomial*> shifted_ptrs;
  for (const auto& f : shifted) shifted_ptrs.push_back(&f);
  const std::vector<Rational> ones(spec.n, Rational(1));
  const RationalMatrix jac = jacobian_at(shifted_ptrs, ones, cols);

  {
    bool zero = true;
    std::string witness;
    for (int r = 0; r < rationals && zero; ++r)
      for (int c = 0; c < spec.k; ++c)
        if (jac[r][c] != 0) {
          zero = false;
          witness = "row " + std::to_string(r + 1) + " col " + std::to_string(c + 1) + " = " +
                    jac[r][c].get_str();
          break;
        }
    report.add("upper_zero_block", zero, witness);
  }
  {
    bool ones_row = true;
    std::string witness;
    for (int c = 0; c < cols; ++c)
      if (jac[rationals][c] != 1) {
        ones_row = false;
        witness = "col " + std::to_string(c + 1) + " = " + jac[rationals][c].get_str();
        break;
      }
    report.add("hamiltonian_row_of_ones", ones_row, witness);
  }
  {
    bool zero = true;
    std::string witness;
    for (int i = 0; i < spec.k && zero; ++i)
      for (int c = spec.k; c < cols; ++c)
        if (jac[rationals + 1 + i][c] != 0) {
          zero = false;
          witness = "row K" + std::to_string(i + 1) + " col " + std::to_string(c + 1) + " = " +
                    jac[rationals + 1 + i][c].get_str();
          break;
        }
    report.add("lower_zero_block", zero, witness);
  }
  {
    // Row monotonicity of the lower-left block, with equality exactly on the
    // middle plateau.
    bool plateau_ok = true;
    std::string witness;
    for (int i = 1; i <= spec.k && plateau_ok; ++i) {
      for (int j = 1; j < spec.k; ++j) {
        const Rational& left = jac[rationals + i][j - 1];
        const Rational& right = jac[rationals + i][j];
        const bool inside = (spec.k - i + 3) / 2 <= j && j < (spec.k + i + 1) / 2;
        const bool ok = inside ? left == right : left > right;
        if (!ok) {
          plateau_ok = false;
          witness = "row " + std::to_string(i) + ", cols " + std::to_string(j) + ":" +
                    std::to_string(j + 1) + " = " + left.get_str() + "," + right.get_str() +
                    (inside ? " (expected equal)" : " (expected strictly decreasing)");
          break;
        }
      }
    }
    report.add("lambda_plateau", plateau_ok, witness);
  }
  {
    const int rank = exact_rank(jac);
    report.add("jacobian_rank_at_ones", rank == rows,
               "rank " + std::to_string(rank) + ", expected " + std::to_string(rows));
  }
  {
    std::mt19937_64 gen(seed);
    const std::vector<Rational> point = random_positive_point(gen, spec.n);
    std::vector<const LaurentPolynomial*> unshifted;
    for (const auto& h : family.rational) unshifted.push_back(&h.poly);
    for (const auto& p : family.polynomial) unshifted.push_back(&p);
    const RationalMatrix full = jacobian_at(unshifted, point, spec.n);
    const int rank = exact_rank(full);
    report.add("jacobian_rank_at_random_point", rank == rows,
               "rank " + std::to_string(rank) + ", expected " + std::to_string(rows));
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport hamiltonian_rank_suite(const SystemSpec& spec, std::uint64_t seed) {
  if (spec.boundary())
    throw std::invalid_argument("hamiltonian_rank_suite: requires n > 2k+1");
  Stopwatch timer;
  VerificationReport report;
  report.suite = "rank";
  report.n = spec.n;
  report.k = spec.k;

  const IntegralFamily family = integral_family(spec);
  // Hamiltonian vector field of f, componentwise: (X_f)_s = {x_s, f}.
  std::vector<std::vector<LaurentPolynomial>> fields;
  for (const LaurentPolynomial& f : family.polynomial) {
    std::vector<LaurentPolynomial> field;
    field.reserve(spec.n);
    for (int s = 0; s < spec.n; ++s)
      field.push_back(poisson_bracket(LaurentPolynomial::variable(spec.n, s), f, spec));
    fields.push_back(std::move(field));
  }

  std::mt19937_64 gen(seed);
  int attempts = 0;
  int rank = -1;
  for (; attempts < 5; ++attempts) {
    const std::vector<Rational> point = random_positive_point(gen, spec.n);
    RationalMatrix values(fields.size(), std::vector<Rational>(spec.n));
    for (std::size_t i = 0; i < fields.size(); ++i)
      for (int s = 0; s < spec.n; ++s) values[i][s] = fields[i][s].evaluate(point);
    rank = exact_rank(std::move(values));
    if (rank == spec.k + 1) break;
  }
  report.add("hamiltonian_fields_span", rank == spec.k + 1,
             "rank " + std::to_string(rank) + " after " + std::to_string(attempts + 1) +
                 " samples, expected " + std::to_string(spec.k + 1));

  {
    // The field of the Hamiltonian at the all-ones point reduces to the row
    // sums of the structure matrix; cross-check against vector_field.
    const std::vector<Rational> ones(spec.n, Rational(1));
    const std::vector<double> ones_d(spec.n, 1.0);
    const std::vector<double> numeric = vector_field(spec, ones_d);
    bool match = true;
    std::string witness;
    for (int s = 0; s < spec.n && match; ++s) {
      const Rational exact = fields[0][s].evaluate(ones);
      if (Rational(numeric[s]) != exact) {
        match = false;
        witness = "component " + std::to_string(s + 1) + ": " + exact.get_str() + " vs " +
                  std::to_string(numeric[s]);
      }
    }
    report.add("field_of_H_matches_vector_field", match, witness);
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport structure_suite(const SystemSpec& spec, std::uint64_t seed) {
  Stopwatch timer;
  VerificationReport report;
  report.suite = "structure";
  report.n = spec.n;
  report.k = spec.k;

  if (spec.n % 2 == 1) {
    const LaurentPolynomial c = casimir(spec);
    bool all_zero = true;
    std::string witness;
    for (int i = 0; i < spec.n && all_zero; ++i) {
      const LaurentPolynomial b =
          poisson_bracket(LaurentPolynomial::variable(spec.n, i), c, spec);
      if (!b.is_zero()) {
        all_zero = false;
        witness = "{x" + std::to_string(i + 1) + ",C} = " + b.to_string();
      }
    }
    report.add("casimir_brackets", all_zero, witness);
  }

  {
    const StructureRank result = rank_and_null_vector(spec);
    const int expected = spec.n - spec.n % 2;
    const bool null_ok = (spec.n % 2 == 1) == result.null_vector.has_value();
    report.add("structure_matrix_rank", result.rank == expected && null_ok,
               "rank " + std::to_string(result.rank) + ", expected " + std::to_string(expected));
  }

  if (spec.k >= 1 && !spec.boundary()) {
    // Multiplicativity: the pullback intertwines the two brackets.
    const int m = spec.m();
    bool ok = true;
    std::string witness;
    for (int i = 0; i < m && ok; ++i) {
      for (int j = i + 1; j < m && ok; ++j) {
        const LaurentPolynomial yi = LaurentPolynomial::variable(m, i);
        const LaurentPolynomial yj = LaurentPolynomial::variable(m, j);
        const LaurentPolynomial lhs =
            poisson_bracket(phi_pullback(yi, spec), phi_pullback(yj, spec), spec);
        const LaurentPolynomial rhs = phi_pullback(yi * yj, spec);  // {y_i,y_j}_0 = y_i y_j
        if (lhs != rhs) {
          ok = false;
          witness = "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        }
      }
    }
    report.add("phi_poisson_property", ok, witness);
  }

  {
    // Reflection is anti-Poisson: {psi f, psi g} + psi{f, g} = 0.
    std::mt19937_64 gen(seed);
    bool ok = true;
    std::string witness;
    for (int trial = 0; trial < 8 && ok; ++trial) {
      Exponents ea(spec.n), eb(spec.n);
      for (int i = 0; i < spec.n; ++i) {
        ea[i] = static_cast<int>(rng_int(gen, -2, 3));
        eb[i] = static_cast<int>(rng_int(gen, -2, 3));
      }
      const LaurentPolynomial f = LaurentPolynomial::monomial(spec.n, ea, rng_rational(gen));
      const LaurentPolynomial g = LaurentPolynomial::monomial(spec.n, eb, rng_rational(gen));
      const LaurentPolynomial residual =
          poisson_bracket(psi_reflect(f), psi_reflect(g), spec) +
          psi_reflect(poisson_bracket(f, g, spec));
      if (!residual.is_zero()) {
        ok = false;
        witness = "trial " + std::to_string(trial) + ": " + residual.to_string();
      }
    }
    report.add("psi_anti_poisson", ok, witness);
  }

  const IntegralFamily family = integral_family(spec);

  {
    // Every rational integral factors as cofactor * (window sum).
    bool ok = true;
    std::string witness;
    for (std::size_t l = 0; l < family.rational.size() && ok; ++l) {
      const RationalIntegral& h = family.rational[l];
      LaurentPolynomial window(spec.n);
      for (int v = h.window_lo; v <= h.window_hi; ++v)
        window += LaurentPolynomial::variable(spec.n, v - 1);
      if (h.poly != h.cofactor * window) {
        ok = false;
        witness = "H" + std::to_string(l + 1);
      }
    }
    report.add("cofactor_factorization", ok, witness);
  }

  if (spec.k >= 1 && !spec.boundary()) {
    // The pullback of the base Hamiltonian is the top polynomial integral.
    LaurentPolynomial base_h(spec.m());
    for (int i = 0; i < spec.m(); ++i) base_h += LaurentPolynomial::variable(spec.m(), i);
    const LaurentPolynomial pulled = phi_pullback(base_h, spec);
    report.add("hamiltonian_pullback_is_top_integral", pulled == family.polynomial[spec.k],
               pulled.to_string());
  }

  if (spec.k >= 1) {
    // Deleting the last variable lowers both n and k by one and restricts
    // each polynomial integral to its counterpart; the top one dies.
    bool ok = true;
    std::string witness;
    SystemSpec current = spec;
    std::vector<LaurentPolynomial> polys = family.polynomial;
    const std::vector<SystemSpec> chain = reduction_chain(spec);
    for (const SystemSpec& expected : chain) {
      std::vector<LaurentPolynomial> reduced;
      SystemSpec reduced_spec(1, 0);
      for (std::size_t i = 0; i < polys.size(); ++i) {
        ReducedPolynomial r = iota_reduce(polys[i], current.n - 1, current);
        reduced_spec = r.spec;
        reduced.push_back(std::move(r.poly));
      }
      if (reduced_spec != expected) {
        ok = false;
        witness = "expected LV(" + std::to_string(expected.n) + "," +
                  std::to_string(expected.k) + "), got LV(" + std::to_string(reduced_spec.n) +
                  "," + std::to_string(reduced_spec.k) + ")";
        break;
      }
      if (!reduced.back().is_zero()) {
        ok = false;
        witness = "top integral survived the restriction to LV(" +
                  std::to_string(expected.n) + "," + std::to_string(expected.k) + ")";
        break;
      }
      reduced.pop_back();
      for (std::size_t i = 0; i < reduced.size(); ++i) {
        if (reduced[i] != polynomial_integral(expected, static_cast<int>(i))) {
          ok = false;
          witness = "K" + std::to_string(i) + " restriction mismatch at LV(" +
                    std::to_string(expected.n) + "," + std::to_string(expected.k) + ")";
          break;
        }
      }
      if (!ok) break;
      current = expected;
      polys = std::move(reduced);
    }
    report.add("reduction_chain", ok, witness);
  }

  if (spec.boundary()) {
    // The cyclic shift permutes the variables and fixes every integral.
    std::vector<int> shift(spec.n);
    for (int i = 0; i < spec.n; ++i) shift[i] = (i + 1) % spec.n;
    bool ok = true;
    std::string witness;
    for (int i = 0; i <= spec.k && ok; ++i) {
      if (family.polynomial[i].permute_variables(shift) != family.polynomial[i]) {
        ok = false;
        witness = "K" + std::to_string(i);
      }
    }
    report.add("cyclic_invariance", ok, witness);
  }

  report.elapsed_seconds = timer.seconds();
  return report;
}

std::vector<SystemSpec> desk_scale_specs(int max_n) {
  std::vector<SystemSpec> specs;
  for (int n = 3; n <= max_n; ++n)
    for (int k = 0; 2 * k + 1 <= n; ++k) specs.emplace_back(n, k);
  return specs;
}

namespace {

unsigned thread_budget(std::size_t jobs) {
  long configured = 0;
  if (const char* env = std::getenv("LVINT_THREADS")) configured = std::strtol(env, nullptr, 10);
  unsigned budget = configured >= 1 ? static_cast<unsigned>(configured)
                                    : std::max(1u, std::thread::hardware_concurrency());
  return std::min<unsigned>(budget, jobs == 0 ? 1 : static_cast<unsigned>(jobs));
}

}  // namespace

std::vector<VerificationReport> run_suites(const std::vector<SuiteKind>& kinds, int max_n,
                                           std::uint64_t seed) {
  struct Job {
    SystemSpec spec;
    SuiteKind kind;
  };
  std::vector<Job> jobs;
  for (const SystemSpec& spec : desk_scale_specs(max_n)) {
    for (SuiteKind kind : kinds) {
      if ((kind == SuiteKind::independence || kind == SuiteKind::rank) && spec.boundary())
        continue;
      jobs.push_back({spec, kind});
    }
  }

  std::vector<VerificationReport> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t index = next.fetch_add(1); index < jobs.size();
         index = next.fetch_add(1)) {
      const Job& job = jobs[index];
      switch (job.kind) {
        case SuiteKind::involution: results[index] = involution_suite(job.spec); break;
        case SuiteKind::independence: results[index] = independence_suite(job.spec, seed); break;
        case SuiteKind::rank: results[index] = hamiltonian_rank_suite(job.spec, seed); break;
        case SuiteKind::structure: results[index] = structure_suite(job.spec, seed); break;
      }
    }
  };
  const unsigned workers = thread_budget(jobs.size());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return results;
}

}  // namespace lvint
