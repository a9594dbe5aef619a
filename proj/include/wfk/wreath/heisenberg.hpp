#pragma once

#include <map>

#include "wfk/exact/linalg.hpp"
#include "wfk/report.hpp"
#include "wfk/wreath/level.hpp"

namespace wfk::wreath {

using Mat = exact::Matrix<CycNum>;

// Ind from Γ_n × Γ_m to Γ_{n+m} by the coset sum over shuffle representatives.
WreathClassFunction induce(const WreathClassFunction& f, const WreathClassFunction& g,
                           std::size_t budget = kDefaultBudget);

// The same induction as a literal sum over every y ∈ Γ_{n+m}; for cross-checking.
WreathClassFunction induce_frobenius(const WreathClassFunction& f, const WreathClassFunction& g,
                                     std::size_t budget = kDefaultBudget);

// Res to Γ_k × Γ_{m-k} followed by pairing the first factor with σ_k(γ).
WreathClassFunction restrict_pair(const WreathClassFunction& f, int k, const groups::ClassFunction& gamma,
                                  std::size_t budget = kDefaultBudget);

// Linear maps R(Γ_a) → R(Γ_{a+shift}) on indicator bases, one block per source level.
class LevelOperator {
 public:
  LevelOperator() = default;
  LevelOperator(GroupHandle base, int shift) : base_(std::move(base)), shift_(shift) {}

  static LevelOperator identity(const GroupHandle& base, int max_level);

  const GroupHandle& base() const { return base_; }
  int shift() const { return shift_; }
  const std::map<int, Mat>& blocks() const { return blocks_; }
  bool has_block(int level) const { return blocks_.count(level) > 0; }
  const Mat& block(int level) const;
  void set_block(int level, Mat m) { blocks_[level] = std::move(m); }

  WreathClassFunction apply(const WreathClassFunction& f) const;

  // Composition this ∘ other on the source levels where both are defined.
  LevelOperator compose(const LevelOperator& other) const;
  LevelOperator restricted(int max_source) const;

  friend LevelOperator operator+(const LevelOperator& a, const LevelOperator& b);
  friend LevelOperator operator-(const LevelOperator& a, const LevelOperator& b);
  friend LevelOperator operator*(const CycNum& s, const LevelOperator& a);
  bool is_zero() const;

 private:
  GroupHandle base_;
  int shift_ = 0;
  std::map<int, Mat> blocks_;
};

// [a, b] on the common source levels.
LevelOperator commutator(const LevelOperator& a, const LevelOperator& b);

// Heisenberg operators p_k(γ) of the group side, realised by induction (k > 0) or by the
// restriction-pairing (k < 0). Blocks cover source levels 0 … max_level (and target ≥ 0).
LevelOperator heisenberg_p(const GroupHandle& base, int k, const groups::ClassFunction& gamma, int max_level,
                           std::size_t budget = kDefaultBudget);

// p_{-k}(γ) as the adjoint of p_k(γ) under the bilinear forms; k > 0.
LevelOperator heisenberg_adjoint(const GroupHandle& base, int k, const groups::ClassFunction& gamma, int max_level,
                                 std::size_t budget = kDefaultBudget);

// [p_k(γ), p_l(γ')] = −k δ_{k,−l} ⟨γ, γ'⟩ on source levels ≤ levels, 0 < |k|,|l| ≤ modes, γ, γ' irreducible.
Report heisenberg_relations_report(const GroupHandle& base, int modes, int levels,
                                   std::size_t budget = kDefaultBudget);

// Gram matrix of the bilinear form on indicator functions of level n.
Mat gram_matrix(const WreathLevel& level);

}  // namespace wfk::wreath
