#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lvint {

/// Exact rational number with arbitrary-precision numerator/denominator.
/// GMP keeps values canonical: positive denominator, gcd(num, den) = 1,
/// zero stored as 0/1.
using Rational = mpq_class;

/// Raised when an operation leaves its mathematical domain (division by
/// zero in an evaluation, a pole on a deleted hyperplane, a trajectory
/// hitting a coordinate plane, ...).  Contract violations use
/// std::invalid_argument instead.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "p", "-p" or "p/q" in base 10 and canonicalizes.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; the "/q" part is omitted when q = 1.
std::string to_string(const Rational& value);

/// base^exponent, with negative exponents allowed for nonzero base.
Rational rational_pow(const Rational& base, long exponent);

/// Binomial coefficient; zero when k > n.  Both arguments must be >= 0.
long long binomial(long n, long k);

}  // namespace lvint
