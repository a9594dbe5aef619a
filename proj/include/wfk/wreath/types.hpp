#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wfk/exact/rational.hpp"
#include "wfk/groups/classes.hpp"

namespace wfk::wreath {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  int multiplicity(int r) const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;
};

// All partitions of n, starting with (n).
std::vector<Partition> partitions(int n);

// Partition-valued function on the conjugacy classes of Γ.
struct TypeFunction {
  std::vector<Partition> by_class;

  int total() const;
  std::string to_string() const;

  auto operator<=>(const TypeFunction&) const = default;
  bool operator==(const TypeFunction&) const = default;
};

std::vector<TypeFunction> enumerate_types(int num_classes, int n);

// Z_ρ = ∏_c ζ_c^{ℓ(ρ(c))} ∏_r r^{m_r(c)} m_r(c)!
exact::Integer centralizer_order(const groups::ClassedGroup& g, const TypeFunction& t);

// The type with every class replaced by its inverse class.
TypeFunction inverse_type(const groups::ClassedGroup& g, const TypeFunction& t);

// Type whose only part is a single n-cycle with cycle product in class c.
TypeFunction cycle_type(int num_classes, int c, int n);

}  // namespace wfk::wreath
