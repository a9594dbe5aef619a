#pragma once

#include "wfk/fock/fock.hpp"
#include "wfk/report.hpp"
#include "wfk/wreath/heisenberg.hpp"
#include "wfk/wreath/wreath_group.hpp"

namespace wfk::charmap {

using exact::CycNum;
using fock::FockOperator;
using fock::FockVector;
using groups::ClassFunction;
using groups::GroupHandle;
using wreath::LevelOperator;
using wreath::WreathClassFunction;

// One even colour per conjugacy class of Γ; the generator a_n(c) stands for p_n(c).
fock::SpaceHandle colored_space(const GroupHandle& base);

fock::Monomial monomial_of_type(const wreath::TypeFunction& t);
wreath::TypeFunction type_of_monomial(const fock::Monomial& m, std::size_t num_classes);

// ch(f) = Σ_ρ f(ρ) p_ρ / Z_ρ.
FockVector ch(const WreathClassFunction& f);
// Inverse of ch on the weight-n part.
WreathClassFunction ch_inverse(const GroupHandle& base, const FockVector& v, int n);
// ⟨p_ρ, p_σ⟩ = δ_{ρ,σ*} Z_ρ, extended bilinearly.
CycNum colored_pairing(const GroupHandle& base, const FockVector& v, const FockVector& w);

// Σ_n p_n(γ) z^{n-1} on the coloured space: p_n(γ) creates Σ_c γ(c)/ζ_c a_n(c) and p_{-n}(γ) is
// the derivation a_n(c) ↦ n γ(c⁻¹).
fock::Field p_field(const GroupHandle& base, const ClassFunction& gamma);
FockOperator p_mode(const GroupHandle& base, int k, const ClassFunction& gamma);

// Weight 0..cutoff coefficients of exp(Σ s_n p_n(γ) zⁿ / n)|0⟩ with s_n = 1, or (-1)^{n-1} if signed_.
std::vector<FockVector> exp_series(const GroupHandle& base, const ClassFunction& gamma, bool signed_, int cutoff);

Report verify_heisenberg_transport(const GroupHandle& base, int cutoff, std::size_t budget = wreath::kDefaultBudget);

// Class K_i(c, n): c ↦ (i+1), the identity class ↦ (1^{n-i-1}). Empty (nullopt) when n < i+1.
std::optional<wreath::TypeFunction> k_class_type(const GroupHandle& base, int i, int c, int n);
// Convolution with K_i(c, n) on R(Γ_n), through the explicit group.
WreathClassFunction delta_i(const wreath::WreathGroup& w, int i, int c, const WreathClassFunction& f);
// Δ_i(a) = Σ_c a(c) Δ_i(K_c) as a level operator on levels 0..max_level.
LevelOperator delta_operator(const GroupHandle& base, int i, const ClassFunction& a, int max_level,
                             std::size_t budget = wreath::kDefaultBudget);

// Cut-and-join form (1/2) Σ_{n,m>0} (p_n p_m ∂-part + p_{n+m} ∂∂-part) on the one-colour space.
FockOperator cubic_formula(int cutoff);
// (1/6) Res z² :a(z)³: through the generic normal-ordered product.
FockOperator cubic_from_normal_order(int cutoff);

// [L_n, L_m] = (n-m) δ L_{n+m} - (n³-n)/12 δ δ_{n,-m} with L_n(γ) read off [Δ_1(K_c), p_n(γ)] for
// n ≠ 0 and L_0(γ) = -Σ_{k>0} p_k(γ) p_{-k}(γ).
Report fw_virasoro_check(const GroupHandle& base, int c, int n_modes, int m_levels,
                         std::size_t budget = wreath::kDefaultBudget);
CycNum fw_prefactor(const GroupHandle& base, int n, int gamma_index, int c);
// Global sign τ with [Δ_1(K_c), p_n(γ)] = τ · prefactor · L_n(γ) under the Ind-creation bracket; fixed by [L_2, L_1] = L_3.
inline constexpr int kDeltaBracketSign = -1;
LevelOperator fw_L(const GroupHandle& base, int n, int gamma_index, int c, int max_level,
                   std::size_t budget = wreath::kDefaultBudget);

// Degree n - ℓ(λ) of a cycle type of S_n.
int filtration_degree(const wreath::TypeFunction& t);
// Top-degree part of convolution on S_n (trivial Γ only).
WreathClassFunction filtered_convolution(const wreath::WreathGroup& sn, const WreathClassFunction& f,
                                         const WreathClassFunction& g);

// Global sign σ with filtered ∪ by the transposition class = σ · ch⁻¹ ∘ d ∘ ch; fixed at n = 2.
inline constexpr int kLehnSorgerSign = -1;
Report lehn_sorger_check(int n, std::size_t budget = wreath::kDefaultBudget);
// Commutativity, associativity and degree additivity of the filtered product on S_n, over all class triples.
Report filtered_product_check(int n, std::size_t budget = wreath::kDefaultBudget);

// ch ∘ Δ_1 ∘ ch⁻¹ against the cubic operator on every class of S_n.
Report conv_cubic_check(int n, std::size_t budget = wreath::kDefaultBudget);
// ch(ε_n(γ)), ch(η_n(γ)) against the exponential expansions for irreducible γ.
Report exp_formula_check(const GroupHandle& base, int n_max, std::size_t budget = wreath::kDefaultBudget);

}  // namespace wfk::charmap
