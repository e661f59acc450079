#pragma once

#include <json.hpp>

#include "glm1/laurent.hpp"

namespace glm1 {

/// {"m": m, "terms": [{"exp": [a1,...,am,b], "coef": "<decimal>"}]} with
/// terms in canonical order. Coefficients travel as decimal strings so
/// arbitrary-precision values survive the trip.
inline nlohmann::ordered_json poly_to_json(const LaurentPoly& p) {
  nlohmann::ordered_json j;
  j["m"] = p.ambient_m();
  j["terms"] = nlohmann::ordered_json::array();
  for (const Term& t : p.terms()) {
    nlohmann::ordered_json term;
    term["exp"] = t.exp;
    term["coef"] = t.coef.str();
    j["terms"].push_back(std::move(term));
  }
  return j;
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
  const int m = j.at("m").get<int>();
  std::vector<Term> terms;
  for (const auto& term : j.at("terms")) {
    Exponents exp = term.at("exp").get<Exponents>();
    Int coef(term.at("coef").get<std::string>());
    terms.push_back({std::move(exp), std::move(coef)});
  }
  return LaurentPoly::from_terms(m, std::move(terms));
}

}  // namespace glm1
