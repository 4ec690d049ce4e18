#pragma once

#include <nlohmann/json.hpp>

#include "qcalc/bivariate.hpp"

namespace qcalc {

// PolyQ          -> ["p/q", ...] ascending by degree
// RationalFunctionQ -> {"numer": [...], "denom": [...]}
// BivariateElement  -> {"numer": [ratfun, ...], "denom": [ratfun, ...]} by t-degree
nlohmann::json to_json(const PolyQ& p);
nlohmann::json to_json(const RationalFunctionQ& f);
nlohmann::json to_json(const BivariateElement& e);

PolyQ poly_from_json(const nlohmann::json& j);
RationalFunctionQ ratfun_from_json(const nlohmann::json& j);
BivariateElement bivariate_from_json(const nlohmann::json& j);

}  // namespace qcalc
