#pragma once

#include <json.hpp>

#include "wfk/groups/classes.hpp"

namespace wfk::groups {

// {"order": n, "mult": [[...]], "labels": [...], "matrices": optional [[a,b,c,d], ...]}
nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

nlohmann::json classes_to_json(const ConjugacyData& c);
nlohmann::json character_table_to_json(const CharacterTable& t);

}  // namespace wfk::groups
