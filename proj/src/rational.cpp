#include "lvint/rational.hpp"

namespace lvint {

Rational parse_rational(std::string_view text) {
  mpq_class value;
  if (value.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("parse_rational: malformed rational '" +
                                std::string(text) + "'");
  if (value.get_den() == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" +
                                std::string(text) + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) throw domain_error("rational_pow: 0 raised to a negative power");
    return Rational(0);
  }
  const unsigned long mag =
      exponent > 0 ? static_cast<unsigned long>(exponent)
                   : static_cast<unsigned long>(-(exponent + 1)) + 1;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), mag);
  if (exponent < 0) std::swap(num, den);
  Rational result(num, den);
  result.canonicalize();
  return result;
}

long long binomial(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > n) return 0;
  mpz_class value;
  mpz_bin_uiui(value.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  if (!value.fits_slong_p())
    throw std::overflow_error("binomial: result does not fit a long");
  return value.get_si();
}

}  // namespace lvint
