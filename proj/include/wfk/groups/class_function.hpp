#pragma once

#include <vector>

#include "wfk/exact/cyclotomic.hpp"
#include "wfk/groups/classes.hpp"

namespace wfk::groups {

using exact::CycNum;

// Exact-valued function on the conjugacy classes of a group.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupHandle g, std::vector<CycNum> values);

  static ClassFunction zero(GroupHandle g);
  static ClassFunction indicator(GroupHandle g, int c);
  static ClassFunction trivial(GroupHandle g);
  static ClassFunction regular(GroupHandle g);
  static ClassFunction irreducible(GroupHandle g, int i);
  // Trace of the 2×2 matrix model; throws MissingMatrixModel.
  static ClassFunction matrix_trace(GroupHandle g);

  const GroupHandle& group() const { return g_; }
  const std::vector<CycNum>& values() const { return v_; }
  const CycNum& operator[](std::size_t c) const { return v_[c]; }
  std::size_t size() const { return v_.size(); }

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const CycNum& s, ClassFunction a);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

  // Pointwise product (tensor product of characters).
  ClassFunction pointwise(const ClassFunction& o) const;
  // x ↦ f(x⁻¹).
  ClassFunction dual() const;

 private:
  GroupHandle g_;
  std::vector<CycNum> v_;
};

void require_same_group(const GroupHandle& a, const GroupHandle& b);

// (1/|G|) Σ_x f(x) g(x⁻¹).
CycNum inner_product(const ClassFunction& f, const ClassFunction& g);

// Element of the centre of ℚ[G] in the class-sum basis K_c.
struct CenterElement {
  GroupHandle group;
  std::vector<CycNum> coords;
};

CenterElement to_center(const ClassFunction& f);
ClassFunction from_center(const CenterElement& z);
CenterElement center_multiply(const CenterElement& a, const CenterElement& b);

// (f * g)(x) = Σ_y f(xy⁻¹) g(y), through the class-sum structure constants.
ClassFunction convolution(const ClassFunction& f, const ClassFunction& g);

}  // namespace wfk::groups
