#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "wfk/exact/cyclotomic.hpp"
#include "wfk/groups/group.hpp"

namespace wfk::groups {

struct ConjugacyData {
  std::vector<int> class_of;
  std::vector<std::uint32_t> class_reps;
  std::vector<std::int64_t> class_sizes;
  std::vector<std::int64_t> centralizer_orders;  // ζ_c
  std::vector<int> inverse_class;
  std::vector<int> rep_orders;

  std::size_t size() const { return class_reps.size(); }
};

// Class 0 is always the identity class.
ConjugacyData conjugacy_classes(const FiniteGroup& g);

// Builds ConjugacyData from a precomputed class labelling (any numbering with the identity
// in its own class); classes are renumbered by first appearance, identity first.
ConjugacyData conjugacy_from_labels(const FiniteGroup& g, const std::vector<int>& labels);

struct CharacterTable {
  // irreducibles[i][c] = χ_i(c); row 0 is the trivial character.
  std::vector<std::vector<exact::CycNum>> irreducibles;
  std::vector<int> degrees;
  int exponent = 1;

  std::size_t size() const { return irreducibles.size(); }
};

class ClassedGroup;
using GroupHandle = std::shared_ptr<const ClassedGroup>;

// A group together with its conjugacy data; the character table is computed on first use.
class ClassedGroup {
 public:
  ClassedGroup(FiniteGroup g, ConjugacyData c, std::string name);

  const FiniteGroup& group() const { return group_; }
  const ConjugacyData& classes() const { return classes_; }
  const std::string& name() const { return name_; }
  std::size_t order() const { return group_.order(); }
  std::size_t num_classes() const { return classes_.size(); }

  // Class of rep(c)^j.
  int power_class(int c, long j) const;

  const CharacterTable& characters() const;
  // Integer tensor of class-sum structure constants, see kernels::class_structure_constants.
  const std::vector<std::int64_t>& structure_constants() const;
  std::int64_t structure_constant(int a, int b, int c) const {
    std::size_t k = num_classes();
    return structure_constants()[(static_cast<std::size_t>(a) * k + b) * k + c];
  }

 private:
  FiniteGroup group_;
  ConjugacyData classes_;
  std::string name_;
  mutable std::once_flag table_once_;
  mutable CharacterTable table_;
  mutable std::once_flag structure_once_;
  mutable std::vector<std::int64_t> structure_;
};

GroupHandle make_group(FiniteGroup g, std::string name = {});
GroupHandle make_group(FiniteGroup g, ConjugacyData c, std::string name);

// Simultaneous eigenvectors of the class-sum matrices; see the source for the method.
CharacterTable character_table(const ClassedGroup& g);

}  // namespace wfk::groups
