#include "wfk/fock/operators.hpp"

#include "wfk/errors.hpp"

namespace wfk::fock {

FockModel::FockModel(FrobeniusAlgebra algebra) : algebra_(std::move(algebra)) {
  std::vector<bool> odd;
  for (std::size_t i = 0; i < algebra_.dim(); ++i) odd.push_back(algebra_.odd(i));
  space_ = make_space(algebra_.labels(), odd);
}

Field FockModel::field(const Element& alpha) const {
  Field f;
  f.odd = algebra_.parity_of(alpha);
  for (std::size_t c = 0; c < algebra_.dim(); ++c) {
    f.create.emplace_back(alpha[c]);
    f.annihilate.emplace_back(-algebra_.integral(algebra_.multiply(alpha, algebra_.basis(c))));
  }
  return f;
}

namespace {

// Splits α into its even and odd parts, dropping zero parts.
std::vector<Element> homogeneous_parts(const FrobeniusAlgebra& a, const Element& alpha) {
  Element even = a.zero(), odd = a.zero();
  bool has_even = false, has_odd = false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (alpha[i] == 0) continue;
    (a.odd(i) ? odd : even)[i] = alpha[i];
    (a.odd(i) ? has_odd : has_even) = true;
  }
  std::vector<Element> parts;
  if (has_even) parts.push_back(even);
  if (has_odd) parts.push_back(odd);
  return parts;
}

}  // namespace

FockOperator q_mode(const FockModel& m, int n, const Element& alpha) {
  FockOperator op(m.space(), n);
  if (n == 0) return op;
  for (const auto& part : homogeneous_parts(m.algebra(), alpha))
    op.add_term(Term{CycNum(1), {m.field(part).mode(n)}});
  return op;
}

Rational tensor_pairing(const FrobeniusAlgebra& a, const std::vector<std::size_t>& x,
                        const std::vector<std::size_t>& beta) {
  Rational p = 1;
  int swaps = 0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    p *= a.integral(a.multiply(a.basis(x[t]), a.basis(beta[t])));
    if (p == 0) return 0;
    if (a.odd(beta[t]))
      for (std::size_t s = t + 1; s < x.size(); ++s) swaps += a.odd(x[s]);
  }
  return swaps % 2 ? -p : p;
}

std::vector<TensorTerm> coproduct_power(const FrobeniusAlgebra& a, const Element& alpha, int k) {
  if (k < 1) throw InvalidInput("coproduct power needs k >= 1");
  std::vector<TensorTerm> out;
  if (k == 1) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (alpha[i] != 0) out.push_back({alpha[i], {i}});
    return out;
  }
  const auto dual = a.dual_basis();
  const std::size_t n = a.dim();
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    // c_i = ∫(α d_{i_1} ⋯ d_{i_k}) / ⟨e_i, d_i⟩, where d_i pairs with e_i to ±1.
    Element prod = alpha;
    for (int t = 0; t < k; ++t) prod = a.multiply(prod, dual[idx[t]]);
    Rational top = a.integral(prod);
    if (top != 0) {
      int swaps = 0;
      for (int t = 0; t < k; ++t)
        if (a.odd(idx[t]))
          for (int s = t + 1; s < k; ++s) swaps += a.odd(idx[s]);
      out.push_back({swaps % 2 ? Rational(-top) : top, idx});
    }
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

FockOperator W_operator(const FockModel& m, int k, int n, const Element& alpha, int max_input_weight) {
  const auto& a = m.algebra();
  auto tensor = coproduct_power(a, alpha, k);
  FockOperator op(m.space(), n, max_input_weight);
  Rational scale = Rational(1) / Rational(exact::factorial(k));
  for (const auto& t : tensor) {
    std::vector<Field> fields;
    for (auto i : t.factors) fields.push_back(m.field(a.basis(i)));
    op += CycNum(scale * t.coef) * normal_ordered_product(m.space(), fields, n, max_input_weight);
  }
  return op;
}

FockOperator virasoro_L(const FockModel& m, int n, const Element& alpha, int max_input_weight) {
  return W_operator(m, 2, n, alpha, max_input_weight);
}

FockOperator boundary_operator(const FockModel& m, int max_input_weight) {
  const auto& a = m.algebra();
  if (a.nondegenerate()) {
    if (a.canonical_class()) {
      for (const auto& x : *a.canonical_class())
        if (x != 0) throw ModelMismatch("projective boundary formula needs a numerically trivial canonical class");
    }
    return CycNum(-1) * W_operator(m, 3, 0, a.unit(), max_input_weight);
  }
  if (a.dim() != 1) throw ModelMismatch("degenerate model is not the one-colour affine plane");
  FockOperator op(m.space(), 0, max_input_weight);
  for (int n = 1; n <= max_input_weight; ++n) {
    for (int k = 1; n + k <= max_input_weight; ++k) {
      ModeOp join{ModeOp::creation, n + k, false, {CycNum(1)}};
      ModeOp dn{ModeOp::annihilation, n, false, {CycNum(1)}};
      ModeOp dk{ModeOp::annihilation, k, false, {CycNum(1)}};
      op.add_term(Term{CycNum(Rational(-n * k, 2)), {join, dn, dk}});
    }
  }
  return op;
}

FockVector B_class(const FockModel& m, int i, const Element& gamma, int n) {
  if (i < 0 || i >= n) throw IndexOutOfRange("B class needs 0 <= i < n");
  FockVector v = m.vacuum();
  auto q1 = q_mode(m, 1, m.algebra().unit());
  for (int r = 0; r < n - i - 1; ++r) v = q1.apply(v);
  v = q_mode(m, i + 1, gamma).apply(v);
  return CycNum(Rational(1) / Rational(exact::factorial(n - i - 1))) * v;
}

std::vector<FockVector> chern_series(const FockModel& m, const Element& gamma, int cutoff) {
  std::vector<FockVector> e{m.vacuum()};
  for (int n = 1; n <= cutoff; ++n) {
    FockVector acc(m.space());
    for (int k = 1; k <= n; ++k) {
      auto v = q_mode(m, k, gamma).apply(e[n - k]);
      acc += (k % 2 ? v : CycNum(-1) * v);
    }
    e.push_back(CycNum(Rational(1, n)) * acc);
  }
  return e;
}

std::vector<FockVector> basis_vectors(const SpaceHandle& s, int max_weight, int min_weight) {
  std::vector<FockVector> out;
  for (int w = min_weight; w <= max_weight; ++w)
    for (const auto& mono : monomials_of_weight(*s, w)) out.push_back(FockVector::monomial(s, mono));
  return out;
}

}  // namespace wfk::fock
