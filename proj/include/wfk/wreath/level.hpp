#pragma once

#include <map>
#include <memory>
#include <vector>

#include "wfk/exact/cyclotomic.hpp"
#include "wfk/groups/class_function.hpp"
#include "wfk/wreath/element.hpp"
#include "wfk/wreath/types.hpp"

namespace wfk::wreath {

using exact::CycNum;
using exact::Integer;
using groups::GroupHandle;

// Default element-count ceiling for brute-force enumerations.
inline constexpr std::size_t kDefaultBudget = 50000;

// Conjugacy data of Γ_n described by types, without building Γ_n.
class WreathLevel {
 public:
  WreathLevel(GroupHandle base, int n);

  const GroupHandle& base() const { return base_; }
  int n() const { return n_; }
  std::size_t size() const { return types_.size(); }
  const std::vector<TypeFunction>& types() const { return types_; }
  const TypeFunction& type(std::size_t i) const { return types_[i]; }
  int index_of(const TypeFunction& t) const;  // throws IndexOutOfRange
  const Integer& centralizer(std::size_t i) const { return z_[i]; }
  const Integer& order() const { return order_; }  // |Γ|ⁿ n!
  int inverse_index(std::size_t i) const { return inverse_[i]; }

 private:
  GroupHandle base_;
  int n_;
  std::vector<TypeFunction> types_;
  std::map<TypeFunction, int> index_;
  std::vector<Integer> z_;
  std::vector<int> inverse_;
  Integer order_;
};

using LevelHandle = std::shared_ptr<const WreathLevel>;
LevelHandle make_level(GroupHandle base, int n);

// Class function on Γ_n, indexed by the level's type order.
class WreathClassFunction {
 public:
  WreathClassFunction() = default;
  WreathClassFunction(LevelHandle level, std::vector<CycNum> values);

  static WreathClassFunction zero(LevelHandle level);
  static WreathClassFunction indicator(LevelHandle level, std::size_t type_index);
  // Constant 1 on Γ_0 (the vacuum).
  static WreathClassFunction vacuum(GroupHandle base);

  const LevelHandle& level() const { return level_; }
  int n() const { return level_->n(); }
  const std::vector<CycNum>& values() const { return v_; }
  const CycNum& operator[](std::size_t i) const { return v_[i]; }
  CycNum& operator[](std::size_t i) { return v_[i]; }
  const CycNum& at(const TypeFunction& t) const { return v_[level_->index_of(t)]; }

  WreathClassFunction& operator+=(const WreathClassFunction& o);
  WreathClassFunction& operator-=(const WreathClassFunction& o);
  friend WreathClassFunction operator+(WreathClassFunction a, const WreathClassFunction& b) { return a += b; }
  friend WreathClassFunction operator-(WreathClassFunction a, const WreathClassFunction& b) { return a -= b; }
  friend WreathClassFunction operator*(const CycNum& s, WreathClassFunction a);
  friend bool operator==(const WreathClassFunction& a, const WreathClassFunction& b);
  WreathClassFunction pointwise(const WreathClassFunction& o) const;
  bool is_zero() const;

 private:
  LevelHandle level_;
  std::vector<CycNum> v_;
};

void require_same_level(const WreathLevel& a, const WreathLevel& b);

// (1/|Γ_n|) Σ_x f(x) g(x⁻¹) = Σ_ρ f(ρ) g(ρ*) / Z_ρ.
CycNum inner_product(const WreathClassFunction& f, const WreathClassFunction& g);

// Value nγ(c) on the n-cycle type with cycle product in c, 0 elsewhere.
WreathClassFunction sigma_n(const LevelHandle& level, const groups::ClassFunction& gamma);

// ∏_cycles γ(cycle product), times sign(s) when signed_ is set.
WreathClassFunction eta_eps(const LevelHandle& level, const groups::ClassFunction& gamma, bool signed_);

// ⟨η_n(ξ) f, g⟩.
CycNum weighted_form(const WreathClassFunction& f, const WreathClassFunction& g, const groups::ClassFunction& xi);

}  // namespace wfk::wreath
