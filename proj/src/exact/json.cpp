#include "wfk/exact/json.hpp"

#include "wfk/errors.hpp"

namespace wfk::exact {

nlohmann::json rational_to_json(const Rational& r) {
  return nlohmann::json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_array() && j.size() == 2) {
    auto part = [](const nlohmann::json& x) {
      return x.is_string() ? Integer(x.get<std::string>()) : Integer(x.get<long>());
    };
    return make_rational(part(j[0]), part(j[1]));
  }
  throw InvalidInput("bad rational encoding: " + j.dump());
}

nlohmann::json cycnum_to_json(const CycNum& c) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(rational_to_json(x));
  return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const nlohmann::json& j) {
  if (!j.is_object()) return CycNum(rational_from_json(j));
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  return CycNum(j.at("conductor").get<int>(), std::move(c));
}

}  // namespace wfk::exact
