#include "wfk/groups/classes.hpp"

#include "wfk/errors.hpp"
#include "wfk/kernels/kernels.hpp"

namespace wfk::groups {

ConjugacyData conjugacy_from_labels(const FiniteGroup& g, const std::vector<int>& labels) {
  const std::size_t n = g.order();
  if (labels.size() != n) throw InvalidInput("class labelling has the wrong size");
  std::vector<int> remap(n + 1, -1);
  ConjugacyData d;
  d.class_of.assign(n, 0);
  auto visit = [&](std::uint32_t x) {
    int l = labels[x];
    if (l < 0 || static_cast<std::size_t>(l) >= n) throw InvalidInput("class label out of range");
    if (remap[l] < 0) {
      remap[l] = static_cast<int>(d.class_reps.size());
      d.class_reps.push_back(x);
      d.class_sizes.push_back(0);
    }
    d.class_of[x] = remap[l];
    d.class_sizes[remap[l]] += 1;
  };
  visit(g.identity());
  for (std::uint32_t x = 0; x < n; ++x) {
    if (x != g.identity()) visit(x);
  }
  if (d.class_sizes[0] != 1) throw InvalidInput("identity must form its own class");
  const std::size_t k = d.class_reps.size();
  for (std::size_t c = 0; c < k; ++c) {
    if (static_cast<std::int64_t>(n) % d.class_sizes[c] != 0)
      throw InvalidInput("class size does not divide the group order");
    d.centralizer_orders.push_back(static_cast<std::int64_t>(n) / d.class_sizes[c]);
    d.inverse_class.push_back(d.class_of[g.inv(d.class_reps[c])]);
    d.rep_orders.push_back(g.element_order(d.class_reps[c]));
  }
  return d;
}

ConjugacyData conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::uint32_t> inverse(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) inverse[x] = g.inv(x);
  auto labels = kernels::conjugacy_orbits(g.table().data(), inverse.data(), g.order());
  return conjugacy_from_labels(g, labels);
}

ClassedGroup::ClassedGroup(FiniteGroup g, ConjugacyData c, std::string name)
    : group_(std::move(g)), classes_(std::move(c)), name_(std::move(name)) {}

int ClassedGroup::power_class(int c, long j) const {
  std::uint32_t x = classes_.class_reps[c];
  long o = classes_.rep_orders[c];
  long e = ((j % o) + o) % o;
  std::uint32_t y = group_.identity();
  for (long i = 0; i < e; ++i) y = group_.mul(y, x);
  return classes_.class_of[y];
}

const CharacterTable& ClassedGroup::characters() const {
  std::call_once(table_once_, [this] { table_ = character_table(*this); });
  return table_;
}

const std::vector<std::int64_t>& ClassedGroup::structure_constants() const {
  std::call_once(structure_once_, [this] {
    std::vector<std::uint32_t> inverse(group_.order());
    for (std::uint32_t x = 0; x < group_.order(); ++x) inverse[x] = group_.inv(x);
    kernels::ClassView view{group_.table().data(), inverse.data(), group_.order(),
                            classes_.class_of.data(), classes_.class_reps.data(), classes_.size()};
    structure_ = kernels::class_structure_constants(view);
  });
  return structure_;
}

GroupHandle make_group(FiniteGroup g, std::string name) {
  auto c = conjugacy_classes(g);
  return std::make_shared<const ClassedGroup>(std::move(g), std::move(c), std::move(name));
}

GroupHandle make_group(FiniteGroup g, ConjugacyData c, std::string name) {
  return std::make_shared<const ClassedGroup>(std::move(g), std::move(c), std::move(name));
}

}  // namespace wfk::groups
