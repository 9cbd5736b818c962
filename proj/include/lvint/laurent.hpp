#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "lvint/rational.hpp"

namespace lvint {

/// Exponent vector of a Laurent monomial; one (possibly negative) entry per
/// variable.  Comparison is lexicographic via std::vector.
using Exponents = std::vector<int>;

/// Multivariate Laurent polynomial with exact rational coefficients.
///
/// Canonical form invariants: no stored coefficient is zero and every
/// exponent vector has length nvars().  Two polynomials are equal iff their
/// variable counts and term maps are equal.  All operations are pure;
/// instances can be shared freely between threads.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit LaurentPolynomial(int nvars = 0);

  static LaurentPolynomial constant(int nvars, Rational value);
  /// The monomial x_{var} (0-based variable index).
  static LaurentPolynomial variable(int nvars, int var);
  static LaurentPolynomial monomial(int nvars, Exponents exps, Rational coeff = Rational(1));

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  /// nullptr when the monomial is absent.
  const Rational* coefficient(const Exponents& exps) const;

  bool operator==(const LaurentPolynomial& rhs) const = default;

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const Rational& scalar);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }
  friend LaurentPolynomial operator*(const Rational& s, LaurentPolynomial a) { return a *= s; }

  /// Formal partial derivative in variable var (0-based); exponent e maps to
  /// coefficient*e with exponent e-1, which is valid for negative e too.
  LaurentPolynomial partial_derivative(int var) const;

  /// Exact evaluation.  A zero coordinate under a negative exponent raises
  /// domain_error naming the offending variable.
  Rational evaluate(std::span<const Rational> point) const;
  /// IEEE-double twin of evaluate, same domain contract.
  double evaluate_double(std::span<const double> point) const;

  /// Substitutes 0 for variable var: terms with a positive exponent vanish,
  /// a negative exponent raises domain_error.  Variable count is unchanged.
  LaurentPolynomial substitute_zero(int var) const;
  /// Deletes the slot of a variable that no surviving term uses.
  LaurentPolynomial drop_variable(int var) const;
  /// Keeps the first new_nvars variables; the discarded slots must be unused.
  LaurentPolynomial truncate_vars(int new_nvars) const;
  /// x_i -> x_{n-1-i}.
  LaurentPolynomial reverse_variables() const;
  /// new exponent[new_of_old[i]] = old exponent[i].
  LaurentPolynomial permute_variables(const std::vector<int>& new_of_old) const;
  /// Substitutes the invertible monomial images[i] (over new_nvars variables)
  /// for variable i.  Exponents transform linearly, coefficients are kept.
  LaurentPolynomial substitute_monomials(int new_nvars,
                                         std::span<const Exponents> images) const;

  /// Human-readable form, e.g. "x1^2*x3^-1 + 2*x2".  Terms are emitted in
  /// descending lexicographic order of their exponent vectors.
  std::string to_string() const;

 private:
  void insert_term(const Exponents& exps, const Rational& coeff);

  int nvars_;
  TermMap terms_;
};

}  // namespace lvint
