#pragma once

#include <string>
#include <vector>

#include "wfk/exact/linalg.hpp"
#include "wfk/groups/class_function.hpp"
#include "wfk/report.hpp"
#include "wfk/wreath/element.hpp"
#include "wfk/wreath/level.hpp"
#include "wfk/wreath/wreath_group.hpp"

namespace wfk::mckay {

using IntMatrix = std::vector<std::vector<long>>;

struct McKayData {
  groups::GroupHandle group;
  groups::ClassFunction q;
  groups::ClassFunction xi;  // 2γ₀ − Q
  IntMatrix adjacency;       // Q ⊗ γ_i = Σ_j a_ij γ_j
  IntMatrix cartan;          // ⟨γ_i, γ_j⟩_ξ
  std::vector<long> marks;
};

// Throws MissingMatrixModel.
McKayData mckay_data(const groups::GroupHandle& g);

// "A1~", "A3~", "D4~", "E6~", ...; throws NotAffineADE.
std::string classify_affine_ade(const IntMatrix& cartan);

// 2n×2n matrix of (g, s) on ℂ^{2n}: block (s(i), i) is g_{s(i)}.
exact::Matrix<exact::CycNum> block_matrix(const groups::FiniteGroup& base, const wreath::WreathElement& x);
exact::CycNum koszul_determinant(const groups::FiniteGroup& base, const wreath::WreathElement& x);

Report koszul_thom_check(const groups::GroupHandle& g, int n, std::size_t budget = wreath::kDefaultBudget);

struct QuiverDimension {
  std::vector<long> v, w, cv;
  long dim = 0;
};

// dim = 2 v·w − v·Cv.
QuiverDimension quiver_dimension(const McKayData& data, int n);

struct WeightedGram {
  std::vector<wreath::WreathClassFunction> irreducibles;
  exact::Matrix<exact::CycNum> gram;  // ⟨χ_i, χ_j⟩_ξ
};

WeightedGram weighted_gram_wreath(const groups::GroupHandle& g, int n, std::size_t budget = wreath::kDefaultBudget);

}  // namespace wfk::mckay
