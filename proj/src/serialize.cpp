#include "qcalc/serialize.hpp"

#include "qcalc/errors.hpp"

namespace qcalc {

using nlohmann::json;

json to_json(const PolyQ& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_fraction_string(c));
  return arr;
}

json to_json(const RationalFunctionQ& f) {
  return json{{"numer", to_json(f.numer())}, {"denom", to_json(f.denom())}};
}

namespace {

json to_json(const PolyT& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

PolyT polyt_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rational functions");
  std::vector<RationalFunctionQ> coeffs;
  for (const auto& c : j) coeffs.push_back(ratfun_from_json(c));
  return PolyT(std::move(coeffs));
}

}  // namespace

json to_json(const BivariateElement& e) {
  return json{{"numer", to_json(e.numer())}, {"denom", to_json(e.denom())}};
}

PolyQ poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of coefficient strings");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw ParseError("coefficient is not a string");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return PolyQ(std::move(coeffs));
}

RationalFunctionQ ratfun_from_json(const json& j) {
  if (!j.is_object() || !j.contains("numer") || !j.contains("denom")) {
    throw ParseError("expected {\"numer\": ..., \"denom\": ...}");
  }
  return {poly_from_json(j.at("numer")), poly_from_json(j.at("denom"))};
}

BivariateElement bivariate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("numer") || !j.contains("denom")) {
    throw ParseError("expected {\"numer\": ..., \"denom\": ...}");
  }
  return {polyt_from_json(j.at("numer")), polyt_from_json(j.at("denom"))};
}

}  // namespace qcalc
