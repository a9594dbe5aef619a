#pragma once

#include <cstdint>
#include <vector>

#include "wfk/groups/classes.hpp"
#include "wfk/wreath/types.hpp"

namespace wfk::wreath {

// (g, s) ∈ Γⁿ ⋊ S_n with (g,s)(h,t) = (g·s(h), st) and s(h)_i = h_{s⁻¹(i)}.
struct WreathElement {
  std::vector<std::uint32_t> g;
  std::vector<int> s;  // s[i] is the image of i

  int n() const { return static_cast<int>(s.size()); }
  bool operator==(const WreathElement&) const = default;
};

WreathElement identity_element(const groups::FiniteGroup& base, int n);
WreathElement multiply(const groups::FiniteGroup& base, const WreathElement& a, const WreathElement& b);
WreathElement inverse(const groups::FiniteGroup& base, const WreathElement& a);

// Conjugacy class index in Γ of the cycle product starting at position i.
int cycle_product_class(const groups::ClassedGroup& base, const WreathElement& a, int i);
TypeFunction type_of(const groups::ClassedGroup& base, const WreathElement& a);
// Parity of the permutation part: +1 or -1.
int permutation_sign(const WreathElement& a);

// Canonical element of the given type.
WreathElement representative(const groups::ClassedGroup& base, const TypeFunction& t);

// Block sum (a, b) ∈ Γ_n × Γ_m ⊂ Γ_{n+m}.
WreathElement embed_pair(const WreathElement& a, const WreathElement& b);

// Index bijection 0 … |Γ|ⁿ·n! − 1: perm_rank·|Γ|ⁿ + digits, g[0] most significant.
std::uint64_t element_index(std::size_t base_order, const WreathElement& a);
WreathElement element_at(std::size_t base_order, int n, std::uint64_t index);

}  // namespace wfk::wreath
