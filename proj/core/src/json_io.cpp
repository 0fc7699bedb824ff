#include "waring/json_io.hpp"

#include "waring/error.hpp"

namespace waring {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("JSON object lacks \"") + key + "\"");
  return j.at(key);
}

Json cyclotomic_array(const std::vector<CyclotomicNumber>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

std::vector<CyclotomicNumber> cyclotomic_vector(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected a JSON array of cyclotomic numbers");
  std::vector<CyclotomicNumber> out;
  for (const auto& x : j) out.push_back(cyclotomic_from_json(x));
  return out;
}

}  // namespace

Json to_json(const CyclotomicNumber& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(to_string(c));
  return Json{{"order", x.order()}, {"coeffs", std::move(coeffs)}};
}

CyclotomicNumber cyclotomic_from_json(const Json& j) {
  try {
    const int order = require(j, "order").get<int>();
    if (order < 1) throw ValidationError("cyclotomic order must be positive");
    const auto& raw = require(j, "coeffs");
    if (!raw.is_array()) throw ValidationError("\"coeffs\" must be an array");
    if (raw.size() != static_cast<std::size_t>(euler_phi(order))) {
      throw ValidationError("Q(z" + std::to_string(order) + ") needs " + std::to_string(euler_phi(order)) +
                            " coefficients, got " + std::to_string(raw.size()));
    }
    std::vector<Rational> coeffs;
    for (const auto& c : raw) coeffs.push_back(parse_rational(c.get<std::string>()));
    return CyclotomicNumber(order, std::move(coeffs));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed cyclotomic number: ") + e.what());
  }
}

Json to_json(const CoprimeForm& form) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < form.size(); ++i) {
    terms.push_back(Json{{"coefficient", to_string(form.coefficients()[i])},
                         {"exponents", form.monomials()[i].full_exponents()}});
  }
  return Json{{"variables", form.variables()}, {"degree", form.degree()}, {"terms", std::move(terms)}};
}

CoprimeForm form_from_json(const Json& j) {
  try {
    auto variables = require(j, "variables").get<std::vector<std::string>>();
    std::vector<Monomial> monomials;
    std::vector<Rational> coefficients;
    for (const auto& t : require(j, "terms")) {
      const auto e = require(t, "exponents").get<Exponents>();
      if (e.size() != variables.size()) throw ValidationError("exponent vector does not match the variable list");
      monomials.push_back(Monomial::from_exponents(e));
      coefficients.push_back(parse_rational(require(t, "coefficient").get<std::string>()));
    }
    CoprimeForm form(std::move(variables), std::move(monomials), std::move(coefficients));
    if (j.contains("degree") && j.at("degree").get<int>() != form.degree()) {
      throw ValidationError("declared degree disagrees with the terms");
    }
    return form;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed form JSON: ") + e.what());
  }
}

Json to_json(const PowerSumDecomposition& decomposition) {
  Json terms = Json::array();
  for (const auto& t : decomposition.terms) {
    terms.push_back(Json{{"gamma", to_json(t.gamma)},
                         {"linear", cyclotomic_array(t.linear)},
                         {"block", t.block},
                         {"point", cyclotomic_array(t.point)}});
  }
  return Json{{"degree", decomposition.degree}, {"variables", decomposition.variables}, {"terms", std::move(terms)}};
}

PowerSumDecomposition decomposition_from_json(const Json& j) {
  try {
    PowerSumDecomposition out;
    out.degree = require(j, "degree").get<int>();
    out.variables = require(j, "variables").get<std::vector<std::string>>();
    for (const auto& t : require(j, "terms")) {
      DecompositionTerm term;
      term.gamma = cyclotomic_from_json(require(t, "gamma"));
      term.linear = cyclotomic_vector(require(t, "linear"));
      term.block = t.contains("block") ? t.at("block").get<std::size_t>() : 0;
      if (t.contains("point")) term.point = cyclotomic_vector(t.at("point"));
      out.terms.push_back(std::move(term));
    }
    return out;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed decomposition JSON: ") + e.what());
  }
}

}  // namespace waring
