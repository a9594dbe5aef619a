#pragma once

#include "wfk/wreath/level.hpp"

namespace wfk::wreath {

// Γ_n as an explicit multiplication-table group.
struct WreathGroup {
  GroupHandle group;
  LevelHandle level;
  std::vector<int> class_to_type;
  std::vector<int> type_to_class;

  WreathElement element(std::uint32_t index) const;
  groups::ClassFunction to_table(const WreathClassFunction& f) const;
  WreathClassFunction from_table(const groups::ClassFunction& f) const;
};

// Throws BudgetExceeded when |Γ|ⁿ·n! exceeds the budget.
WreathGroup build_wreath(const GroupHandle& base, int n, std::size_t budget = kDefaultBudget);

}  // namespace wfk::wreath
