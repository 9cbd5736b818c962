#pragma once

#include <cstdint>
#include <random>

#include "lvint/rational.hpp"

namespace lvint {

/// Fixed default seed; runs are reproducible unless the caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 12345;

// Draws below avoid std:: distributions, whose exact output is not pinned by
// the standard; mt19937_64 itself is.

inline long rng_int(std::mt19937_64& gen, long lo, long hi) {
  return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double rng_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double rng_uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * rng_unit(gen);
}

inline Rational rng_rational(std::mt19937_64& gen, long max_num = 9, long max_den = 6) {
  Rational value(rng_int(gen, -max_num, max_num), rng_int(gen, 1, max_den));
  value.canonicalize();
  return value;
}

inline Rational rng_positive_rational(std::mt19937_64& gen, long max_num = 12,
                                      long max_den = 8) {
  Rational value(rng_int(gen, 1, max_num), rng_int(gen, 1, max_den));
  value.canonicalize();
  return value;
}

}  // namespace lvint
