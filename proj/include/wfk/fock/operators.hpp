#pragma once

#include <vector>

#include "wfk/fock/fock.hpp"
#include "wfk/fock/frobenius.hpp"

namespace wfk::fock {

// Fock space of a Frobenius algebra: one colour per basis element.
class FockModel {
 public:
  explicit FockModel(FrobeniusAlgebra algebra);
  const FrobeniusAlgebra& algebra() const { return algebra_; }
  const SpaceHandle& space() const { return space_; }
  FockVector vacuum() const { return FockVector::vacuum(space_); }
  // α(z) = Σ q_n(α) z^{n-1} for homogeneous α.
  Field field(const Element& alpha) const;

 private:
  FrobeniusAlgebra algebra_;
  SpaceHandle space_;
};

// q_n(α): n > 0 creates a_n(α); n < 0 is the derivation with [q_n(α), q_{-n}(β)] = n ∫(αβ).
FockOperator q_mode(const FockModel& m, int n, const Element& alpha);

// Σ_j α_{j,1} ⊗ ⋯ ⊗ α_{j,k} as (coefficient, basis indices) pairs.
struct TensorTerm {
  Rational coef;
  std::vector<std::size_t> factors;
};
std::vector<TensorTerm> coproduct_power(const FrobeniusAlgebra& a, const Element& alpha, int k);
// ⟨x_1⊗⋯⊗x_k, β_1⊗⋯⊗β_k⟩ on basis tensors, with the Koszul sign.
Rational tensor_pairing(const FrobeniusAlgebra& a, const std::vector<std::size_t>& x,
                        const std::vector<std::size_t>& beta);

FockOperator W_operator(const FockModel& m, int k, int n, const Element& alpha, int max_input_weight);
FockOperator virasoro_L(const FockModel& m, int n, const Element& alpha, int max_input_weight);

// Projective models need K_X = 0 and use -W³₀(1); the one-colour affine model uses
// -(1/2) Σ nm q_{n+m} ∂_n ∂_m.
FockOperator boundary_operator(const FockModel& m, int max_input_weight);

FockVector B_class(const FockModel& m, int i, const Element& gamma, int n);

// Coefficients (weights 0..cutoff) of exp(Σ (-1)^{n-1} q_n(γ) zⁿ / n)|0⟩.
std::vector<FockVector> chern_series(const FockModel& m, const Element& gamma, int cutoff);

// All monomials of weight ≤ cutoff as unit vectors.
std::vector<FockVector> basis_vectors(const SpaceHandle& s, int max_weight, int min_weight = 0);

}  // namespace wfk::fock
