#pragma once

#include <json.hpp>

#include "wfk/exact/cyclotomic.hpp"

namespace wfk::exact {

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

// {"conductor": N, "coeffs": [["num","den"], ...]}
nlohmann::json cycnum_to_json(const CycNum& c);
CycNum cycnum_from_json(const nlohmann::json& j);

}  // namespace wfk::exact
