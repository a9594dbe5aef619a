#include "wfk/groups/json.hpp"

#include "wfk/errors.hpp"
#include "wfk/exact/json.hpp"

namespace wfk::groups {

using nlohmann::json;

json group_to_json(const FiniteGroup& g) {
  json mult = json::array();
  for (std::size_t x = 0; x < g.order(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < g.order(); ++y) row.push_back(g.mul(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)));
    mult.push_back(std::move(row));
  }
  json out{{"order", g.order()}, {"mult", std::move(mult)}};
  if (!g.labels().empty()) out["labels"] = g.labels();
  if (g.matrices()) {
    json ms = json::array();
    for (const auto& m : *g.matrices()) {
      ms.push_back(json::array({exact::cycnum_to_json(m.a), exact::cycnum_to_json(m.b),
                                exact::cycnum_to_json(m.c), exact::cycnum_to_json(m.d)}));
    }
    out["matrices"] = std::move(ms);
  }
  return out;
}

FiniteGroup group_from_json(const json& j) {
  try {
    std::size_t n = j.at("order").get<std::size_t>();
    std::vector<std::uint32_t> mult;
    mult.reserve(n * n);
    const auto& rows = j.at("mult");
    if (rows.size() != n) throw InvalidInput("mult must have `order` rows");
    for (const auto& row : rows) {
      if (row.size() != n) throw InvalidInput("mult rows must have `order` entries");
      for (const auto& v : row) mult.push_back(v.get<std::uint32_t>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::optional<std::vector<Mat2>> mats;
    if (j.contains("matrices") && !j.at("matrices").is_null()) {
      mats.emplace();
      for (const auto& m : j.at("matrices")) {
        mats->push_back({exact::cycnum_from_json(m.at(0)), exact::cycnum_from_json(m.at(1)),
                         exact::cycnum_from_json(m.at(2)), exact::cycnum_from_json(m.at(3))});
      }
    }
    return FiniteGroup::from_table(std::move(mult), n, std::move(labels), std::move(mats));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed group JSON: ") + e.what());
  }
}

json classes_to_json(const ConjugacyData& c) {
  return {{"class_reps", c.class_reps},
          {"class_sizes", c.class_sizes},
          {"centralizer_orders", c.centralizer_orders},
          {"inverse_class", c.inverse_class},
          {"rep_orders", c.rep_orders}};
}

json character_table_to_json(const CharacterTable& t) {
  json rows = json::array();
  for (const auto& r : t.irreducibles) {
    json row = json::array();
    for (const auto& v : r) row.push_back(exact::cycnum_to_json(v));
    rows.push_back(std::move(row));
  }
  return {{"degrees", t.degrees}, {"irreducibles", std::move(rows)}, {"exponent", t.exponent}};
}

}  // namespace wfk::groups
