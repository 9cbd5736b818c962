#include "lvint/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace lvint {

namespace {

void check_same_width(const LaurentPolynomial& a, const LaurentPolynomial& b,
                      const char* op) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument(std::string(op) + ": variable-count mismatch (" +
                                std::to_string(a.nvars()) + " vs " +
                                std::to_string(b.nvars()) + ")");
}

void check_var_index(const LaurentPolynomial& p, int var, const char* op) {
  if (var < 0 || var >= p.nvars())
    throw std::invalid_argument(std::string(op) + ": variable index " +
                                std::to_string(var) + " out of range for " +
                                std::to_string(p.nvars()) + " variables");
}

double double_pow(double base, int exponent) {
  double result = 1.0;
  double factor = exponent >= 0 ? base : 1.0 / base;
  for (int e = std::abs(exponent); e > 0; e >>= 1) {
    if (e & 1) result *= factor;
    factor *= factor;
  }
  return result;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("LaurentPolynomial: negative variable count");
}

LaurentPolynomial LaurentPolynomial::constant(int nvars, Rational value) {
  return monomial(nvars, Exponents(nvars, 0), std::move(value));
}

LaurentPolynomial LaurentPolynomial::variable(int nvars, int var) {
  Exponents exps(nvars, 0);
  if (var < 0 || var >= nvars)
    throw std::invalid_argument("variable: index out of range");
  exps[var] = 1;
  return monomial(nvars, std::move(exps));
}

LaurentPolynomial LaurentPolynomial::monomial(int nvars, Exponents exps, Rational coeff) {
  LaurentPolynomial p(nvars);
  if (static_cast<int>(exps.size()) != nvars)
    throw std::invalid_argument("monomial: exponent vector length mismatch");
  if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
  return p;
}

const Rational* LaurentPolynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? nullptr : &it->second;
}

void LaurentPolynomial::insert_term(const Exponents& exps, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  check_same_width(*this, rhs, "add");
  for (const auto& [exps, coeff] : rhs.terms_) insert_term(exps, coeff);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  check_same_width(*this, rhs, "sub");
  for (const auto& [exps, coeff] : rhs.terms_) {
    Rational negated = -coeff;
    insert_term(exps, negated);
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  check_same_width(*this, rhs, "mul");
  LaurentPolynomial result(nvars_);
  Exponents exps(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int i = 0; i < nvars_; ++i) exps[i] = ea[i] + eb[i];
      Rational prod = ca * cb;
      result.insert_term(exps, prod);
    }
  }
  terms_ = std::move(result.terms_);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, coeff] : terms_) coeff *= scalar;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial result(*this);
  for (auto& [exps, coeff] : result.terms_) coeff = -coeff;
  return result;
}

LaurentPolynomial LaurentPolynomial::partial_derivative(int var) const {
  check_var_index(*this, var, "partial_derivative");
  LaurentPolynomial result(nvars_);
  for (const auto& [exps, coeff] : terms_) {
    if (exps[var] == 0) continue;
    Exponents d(exps);
    d[var] -= 1;
    result.terms_.emplace(std::move(d), coeff * exps[var]);
  }
  return result;
}

Rational LaurentPolynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational total(0);
  for (const auto& [exps, coeff] : terms_) {
    Rational term = coeff;
    for (int i = 0; i < nvars_; ++i) {
      if (exps[i] == 0) continue;
      if (point[i] == 0 && exps[i] < 0)
        throw domain_error("evaluate: x" + std::to_string(i + 1) +
                           " = 0 raised to a negative power");
      term *= rational_pow(point[i], exps[i]);
    }
    total += term;
  }
  return total;
}

double LaurentPolynomial::evaluate_double(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluate_double: point dimension mismatch");
  double total = 0.0;
  for (const auto& [exps, coeff] : terms_) {
    double term = coeff.get_d();
    for (int i = 0; i < nvars_; ++i) {
      if (exps[i] == 0) continue;
      if (point[i] == 0.0 && exps[i] < 0)
        throw domain_error("evaluate_double: x" + std::to_string(i + 1) +
                           " = 0 raised to a negative power");
      term *= double_pow(point[i], exps[i]);
    }
    total += term;
  }
  return total;
}

LaurentPolynomial LaurentPolynomial::substitute_zero(int var) const {
  check_var_index(*this, var, "substitute_zero");
  LaurentPolynomial result(nvars_);
  for (const auto& [exps, coeff] : terms_) {
    if (exps[var] > 0) continue;
    if (exps[var] < 0)
      throw domain_error("substitute_zero: x" + std::to_string(var + 1) +
                         " appears with a negative exponent");
    result.terms_.emplace(exps, coeff);
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::drop_variable(int var) const {
  check_var_index(*this, var, "drop_variable");
  LaurentPolynomial result(nvars_ - 1);
  for (const auto& [exps, coeff] : terms_) {
    if (exps[var] != 0)
      throw std::invalid_argument("drop_variable: x" + std::to_string(var + 1) +
                                  " is still in use");
    Exponents reduced;
    reduced.reserve(nvars_ - 1);
    for (int i = 0; i < nvars_; ++i)
      if (i != var) reduced.push_back(exps[i]);
    result.terms_.emplace(std::move(reduced), coeff);
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::truncate_vars(int new_nvars) const {
  if (new_nvars < 0 || new_nvars > nvars_)
    throw std::invalid_argument("truncate_vars: bad target width");
  LaurentPolynomial result(new_nvars);
  for (const auto& [exps, coeff] : terms_) {
    for (int i = new_nvars; i < nvars_; ++i)
      if (exps[i] != 0)
        throw std::invalid_argument("truncate_vars: x" + std::to_string(i + 1) +
                                    " is still in use");
    result.terms_.emplace(Exponents(exps.begin(), exps.begin() + new_nvars), coeff);
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::reverse_variables() const {
  LaurentPolynomial result(nvars_);
  for (const auto& [exps, coeff] : terms_) {
    Exponents reversed(exps.rbegin(), exps.rend());
    result.terms_.emplace(std::move(reversed), coeff);
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::permute_variables(const std::vector<int>& new_of_old) const {
  if (static_cast<int>(new_of_old.size()) != nvars_)
    throw std::invalid_argument("permute_variables: permutation length mismatch");
  LaurentPolynomial result(nvars_);
  for (const auto& [exps, coeff] : terms_) {
    Exponents moved(nvars_, 0);
    for (int i = 0; i < nvars_; ++i) moved.at(new_of_old[i]) = exps[i];
    result.terms_.emplace(std::move(moved), coeff);
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::substitute_monomials(
    int new_nvars, std::span<const Exponents> images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("substitute_monomials: one image per variable required");
  for (const Exponents& image : images)
    if (static_cast<int>(image.size()) != new_nvars)
      throw std::invalid_argument("substitute_monomials: image width mismatch");
  LaurentPolynomial result(new_nvars);
  for (const auto& [exps, coeff] : terms_) {
    Exponents mapped(new_nvars, 0);
    for (int i = 0; i < nvars_; ++i) {
      if (exps[i] == 0) continue;
      for (int j = 0; j < new_nvars; ++j) mapped[j] += exps[i] * images[i][j];
    }
    result.insert_term(mapped, coeff);
  }
  return result;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending lexicographic order puts x1 in front.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    const bool negative = coeff < 0;
    Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    std::string vars;
    for (int i = 0; i < nvars_; ++i) {
      if (exps[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (exps[i] != 1) vars += "^" + std::to_string(exps[i]);
    }
    if (vars.empty()) {
      out << magnitude.get_str();
    } else if (magnitude == 1) {
      out << vars;
    } else {
      out << magnitude.get_str() << "*" << vars;
    }
  }
  return out.str();
}

}  // namespace lvint
