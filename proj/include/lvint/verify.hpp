#pragma once

#include <cstdint>
#include <vector>

#include "lvint/integrals.hpp"
#include "lvint/report.hpp"
#include "lvint/rng.hpp"

namespace lvint {

/// Exact-zero checks for every required bracket pair: the polynomial
/// integrals among themselves, polynomial against rational, and the leading
/// r-1 rational integrals pairwise.  At the boundary n = 2k+1 only the
/// polynomial pairs exist.
VerificationReport involution_suite(const SystemSpec& spec);

/// Exact Jacobian certificate at the all-ones point: block structure, row
/// plateau of the lower-left block, and full rank n-k-1; plus a rank check
/// of the unshifted Jacobian at a seeded random positive rational point.
/// Requires n > 2k+1.
VerificationReport independence_suite(const SystemSpec& spec, std::uint64_t seed = kDefaultSeed);

/// Spans of the Hamiltonian vector fields of the k+1 polynomial integrals at
/// a seeded random positive rational point (resampled on deficiency, at most
/// five times).  Requires n > 2k+1.
VerificationReport hamiltonian_rank_suite(const SystemSpec& spec,
                                          std::uint64_t seed = kDefaultSeed);

/// Structural identities: Casimir brackets, structure-matrix rank and null
/// vector, the multiplicative map property, reflection anti-symmetry, the
/// cofactor factorization, restriction chain, the Hamiltonian-pullback
/// identity, and cyclic invariance at the boundary.
VerificationReport structure_suite(const SystemSpec& spec, std::uint64_t seed = kDefaultSeed);

enum class SuiteKind { involution, independence, rank, structure };

/// All (n,k) with 3 <= n <= max_n and 2k+1 <= n.
std::vector<SystemSpec> desk_scale_specs(int max_n);

/// Runs the selected suites over the desk-scale specs, fanning independent
/// jobs out to a pool bounded by LVINT_THREADS.  Results are ordered by
/// (n, k, suite) regardless of scheduling.
std::vector<VerificationReport> run_suites(const std::vector<SuiteKind>& kinds, int max_n,
                                           std::uint64_t seed = kDefaultSeed);

}  // namespace lvint
