#pragma once

#include <json.hpp>

#include "lvint/laurent.hpp"

namespace lvint {

/// A polynomial is a list of {"coeff": "p/q", "exp": [e_1, ..., e_n]}
/// records, emitted in descending lexicographic exponent order.
inline nlohmann::ordered_json poly_to_json(const LaurentPolynomial& poly) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  const auto& map = poly.terms();
  for (auto it = map.rbegin(); it != map.rend(); ++it) {
    nlohmann::ordered_json term;
    term["coeff"] = it->second.get_str();
    term["exp"] = it->first;
    terms.push_back(std::move(term));
  }
  return terms;
}

inline LaurentPolynomial poly_from_json(const nlohmann::json& terms, int nvars) {
  LaurentPolynomial poly(nvars);
  for (const auto& term : terms) {
    const Exponents exps = term.at("exp").get<Exponents>();
    poly += LaurentPolynomial::monomial(nvars, exps,
                                        parse_rational(term.at("coeff").get<std::string>()));
  }
  return poly;
}

}  // namespace lvint
