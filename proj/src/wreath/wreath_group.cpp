#include "wfk/wreath/wreath_group.hpp"

#include "wfk/errors.hpp"

namespace wfk::wreath {

WreathElement WreathGroup::element(std::uint32_t index) const {
  return element_at(level->base()->order(), level->n(), index);
}

groups::ClassFunction WreathGroup::to_table(const WreathClassFunction& f) const {
  require_same_level(*level, *f.level());
  std::vector<CycNum> v(class_to_type.size());
  for (std::size_t c = 0; c < v.size(); ++c) v[c] = f[class_to_type[c]];
  return groups::ClassFunction(group, std::move(v));
}

WreathClassFunction WreathGroup::from_table(const groups::ClassFunction& f) const {
  groups::require_same_group(group, f.group());
  std::vector<CycNum> v(type_to_class.size());
  for (std::size_t t = 0; t < v.size(); ++t) v[t] = f[type_to_class[t]];
  return WreathClassFunction(level, std::move(v));
}

WreathGroup build_wreath(const GroupHandle& base, int n, std::size_t budget) {
  auto level = make_level(base, n);
  if (level->order() > Integer(static_cast<unsigned long>(budget))) {
    throw BudgetExceeded("|Γ_" + std::to_string(n) + "| = " + level->order().get_str() + " exceeds the budget " +
                         std::to_string(budget));
  }
  const std::size_t order = level->order().get_ui();
  const std::size_t bo = base->order();
  const auto& G = base->group();
  std::vector<WreathElement> elems(order);
  for (std::size_t i = 0; i < order; ++i) elems[i] = element_at(bo, n, i);
  std::vector<std::uint32_t> mult(order * order);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      mult[i * order + j] = static_cast<std::uint32_t>(element_index(bo, multiply(G, elems[i], elems[j])));
    }
  }
  std::vector<int> labels(order);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < order; ++i) {
    labels[i] = level->index_of(type_of(*base, elems[i]));
  }
  auto fg = groups::FiniteGroup::from_table(std::move(mult), order);
  auto cd = groups::conjugacy_from_labels(fg, labels);
  WreathGroup w;
  w.level = level;
  w.class_to_type.resize(cd.size());
  w.type_to_class.assign(level->size(), -1);
  for (std::size_t c = 0; c < cd.size(); ++c) {
    int t = labels[cd.class_reps[c]];
    w.class_to_type[c] = t;
    w.type_to_class[t] = static_cast<int>(c);
  }
  for (int c : w.type_to_class)
    if (c < 0) throw InvalidInput("a type has no element in the explicit wreath group");
  w.group = groups::make_group(std::move(fg), std::move(cd), base->name() + " wr S_" + std::to_string(n));
  return w;
}

}  // namespace wfk::wreath
