#include <doctest.h>

#include <random>

#include "wfk/errors.hpp"
#include "wfk/fock/operators.hpp"

using namespace wfk::fock;
using wfk::exact::Rational;

namespace {

FockVector commutator_on(const FockOperator& a, const FockOperator& b, const FockVector& v) {
  return supercommutator(a, b, v);
}

Element random_element(const FrobeniusAlgebra& a, std::mt19937& rng, bool odd_part) {
  std::uniform_int_distribution<int> d(-2, 2);
  Element e = a.zero();
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.odd(i) == odd_part) e[i] = d(rng);
  return e;
}

}  // namespace

TEST_CASE("Frobenius models") {
  for (const char* name : {"point", "p2", "p1xp1", "abelian-surface"}) {
    auto a = builtin_model(name);
    CHECK(a.nondegenerate());
    auto d = a.dual_basis();
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        CHECK(a.integral(a.multiply(a.basis(i), d[j])) == Rational(i == j ? 1 : 0));
    // The diagonal class δ^*δ_*(1) is the Euler class.
    Element diag = a.zero();
    for (const auto& t : coproduct_power(a, a.unit(), 2))
      diag = diag + t.coef * a.multiply(a.basis(t.factors[0]), a.basis(t.factors[1]));
    CHECK(diag == *a.euler_class());
    auto round = model_from_json(model_to_json(a));
    CHECK(model_to_json(round) == model_to_json(a));
  }
  for (const char* name : {"point", "p2", "p1xp1", "affine-plane", "abelian-surface"}) {
    auto from_file = load_model(std::string(WFK_SOURCE_DIR) + "/models/" + name + ".json");
    CHECK(model_to_json(from_file) == model_to_json(builtin_model(name)));
  }
  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), wfk::InvalidInput);
  auto aff = builtin_model("affine-plane");
  CHECK_FALSE(aff.nondegenerate());
  CHECK_THROWS_AS(aff.dual_basis(), wfk::DegeneratePairing);
  auto e = builtin_model("abelian-surface");
  CHECK(e.dim() == 16);
  CHECK(e.multiply(e.basis(1), e.basis(1)) == e.zero());
  CHECK(e.multiply(e.basis(1), e.basis(2)) == Rational(-1) * e.multiply(e.basis(2), e.basis(1)));
  nlohmann::json bad = model_to_json(builtin_model("p2"));
  bad["products"].push_back({{"a", "h"}, {"b", "h2"}, {"c", {{"h", "1"}}}});
  CHECK_THROWS_AS(model_from_json(bad), wfk::InvalidInput);
}

TEST_CASE("coproduct powers") {
  auto p2 = builtin_model("p2");
  auto one = coproduct_power(p2, p2.unit(), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].factors == std::vector<std::size_t>{0});
  auto pt = builtin_model("point");
  auto pp = coproduct_power(pt, pt.basis(0), 2);
  REQUIRE(pp.size() == 1);
  CHECK(pp[0].coef == 1);
  auto d2 = coproduct_power(p2, p2.unit(), 2);
  std::map<std::vector<std::size_t>, Rational> got;
  for (const auto& t : d2) got[t.factors] = t.coef;
  std::map<std::vector<std::size_t>, Rational> expected{{{0, 2}, 1}, {{1, 1}, 1}, {{2, 0}, 1}};
  CHECK(got == expected);
  CHECK_THROWS_AS(coproduct_power(builtin_model("affine-plane"), Element{1}, 2), wfk::DegeneratePairing);
  // ⟨δ_{k*}α, β_1⊗⋯⊗β_k⟩ = ∫ α β_1 ⋯ β_k on basis tuples.
  std::mt19937 rng(1);
  for (const char* name : {"p2", "p1xp1", "abelian-surface"}) {
    auto a = builtin_model(name);
    std::uniform_int_distribution<std::size_t> pick(0, a.dim() - 1);
    for (int k = 2; k <= 3; ++k) {
      for (std::size_t x = 0; x < a.dim(); ++x) {
        auto tensor = coproduct_power(a, a.basis(x), k);
        for (int trial = 0; trial < 40; ++trial) {
          std::vector<std::size_t> beta(k);
          for (auto& b : beta) b = pick(rng);
          Rational lhs = 0;
          for (const auto& t : tensor) lhs += t.coef * tensor_pairing(a, t.factors, beta);
          Element prod = a.basis(x);
          for (auto b : beta) prod = a.multiply(prod, a.basis(b));
          CHECK(lhs == a.integral(prod));
        }
      }
    }
  }
}

TEST_CASE("Heisenberg modes") {
  for (const char* name : {"p2", "point"}) {
    FockModel m(builtin_model(name));
    const auto& a = m.algebra();
    auto basis = basis_vectors(m.space(), 4);
    auto vac = m.vacuum();
    CHECK(q_mode(m, 1, a.unit()).apply(vac).max_weight() == 1);
    for (int n = -3; n <= 3; ++n) {
      for (int k = -3; k <= 3; ++k) {
        if (n == 0 || k == 0) continue;
        for (std::size_t i = 0; i < a.dim(); ++i) {
          for (std::size_t j = 0; j < a.dim(); ++j) {
            auto qa = q_mode(m, n, a.basis(i)), qb = q_mode(m, k, a.basis(j));
            Rational c = n + k == 0 ? n * a.integral(a.multiply(a.basis(i), a.basis(j))) : Rational(0);
            for (const auto& v : basis) CHECK(commutator_on(qa, qb, v) == CycNum(c) * v);
          }
        }
      }
    }
  }
}

TEST_CASE("odd classes follow the exterior law") {
  FockModel m(builtin_model("abelian-surface"));
  const auto& a = m.algebra();
  auto e1 = a.basis(1), e2 = a.basis(2);
  auto vac = m.vacuum();
  auto q1 = [&](const Element& x) { return q_mode(m, 1, x); };
  CHECK(q1(e1).apply(q1(e1).apply(vac)).is_zero());
  CHECK(q1(e1).apply(q1(e2).apply(vac)) == CycNum(-1) * q1(e2).apply(q1(e1).apply(vac)));
  // Supercommutators of odd modes on a small truncation.
  auto basis = basis_vectors(m.space(), 2);
  std::mt19937 rng(4);
  for (int trial = 0; trial < 12; ++trial) {
    auto x = random_element(a, rng, trial % 2), y = random_element(a, rng, trial % 3 == 0);
    for (int n : {-2, -1, 1, 2}) {
      for (int k : {-2, -1, 1, 2}) {
        Rational c = n + k == 0 ? n * a.integral(a.multiply(x, y)) : Rational(0);
        for (std::size_t b = 0; b < basis.size(); b += 7)
          CHECK(commutator_on(q_mode(m, n, x), q_mode(m, k, y), basis[b]) == CycNum(c) * basis[b]);
      }
    }
  }
}

TEST_CASE("normal-ordered products") {
  FockModel m(builtin_model("p2"));
  const auto& a = m.algebra();
  auto basis = basis_vectors(m.space(), 3);
  auto h = a.basis(1), one = a.unit();
  for (int n = -3; n <= 3; ++n) {
    if (n == 0) continue;
    auto single = normal_ordered_product(m.space(), {m.field(h)}, n, 3);
    for (const auto& v : basis) CHECK(single.apply(v) == q_mode(m, n, h).apply(v));
  }
  // Mode 0 of :α(z)β(z): is q_1(α)q_{-1}(β) + q_1(β)q_{-1}(α) below weight 2, by hand.
  auto ab = normal_ordered_product(m.space(), {m.field(h), m.field(one)}, 0, 1);
  for (const auto& v : basis_vectors(m.space(), 1)) {
    auto hand = q_mode(m, 1, h).apply(q_mode(m, -1, one).apply(v)) + q_mode(m, 1, one).apply(q_mode(m, -1, h).apply(v));
    CHECK(ab.apply(v) == hand);
  }
  CHECK(ab.apply(m.vacuum()).is_zero());
  for (int n = -2; n <= 2; ++n) {
    auto x = normal_ordered_product(m.space(), {m.field(h), m.field(one)}, n, 3);
    auto y = normal_ordered_product(m.space(), {m.field(one), m.field(h)}, n, 3);
    for (const auto& v : basis) CHECK(x.apply(v) == y.apply(v));
  }
  auto cut = normal_ordered_product(m.space(), {m.field(h), m.field(one)}, 0, 2);
  CHECK_THROWS_AS(cut.apply(basis.back()), wfk::CutoffTooSmall);
}

TEST_CASE("W operators and the Virasoro algebra") {
  FockModel m(builtin_model("p2"));
  const auto& a = m.algebra();
  auto basis = basis_vectors(m.space(), 3);
  for (int n = -2; n <= 2; ++n) {
    if (n == 0) continue;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      auto w1 = W_operator(m, 1, n, a.basis(i), 4);
      for (const auto& v : basis_vectors(m.space(), 4)) CHECK(w1.apply(v) == q_mode(m, n, a.basis(i)).apply(v));
    }
  }
  const int cutoff = 5;
  std::map<std::pair<int, std::size_t>, FockOperator> L;
  for (int n = -4; n <= 4; ++n)
    for (std::size_t i = 0; i < a.dim(); ++i) L.emplace(std::make_pair(n, i), virasoro_L(m, n, a.basis(i), cutoff));
  const Rational c2 = a.integral(*a.euler_class());
  CHECK(c2 == 3);
  auto one = a.unit();
  // [L_1(1), L_{-1}(1)] = 2 L_0(1) and [L_2(1), L_{-2}(1)] - 4 L_0(1) = -(6/12)·3.
  for (const auto& v : basis) {
    CHECK(commutator_on(L.at({1, 0}), L.at({-1, 0}), v) == CycNum(2) * L.at({0, 0}).apply(v));
    CHECK(commutator_on(L.at({2, 0}), L.at({-2, 0}), v) - CycNum(4) * L.at({0, 0}).apply(v) ==
          CycNum(Rational(-3, 2)) * v);
  }
  for (int n = -2; n <= 2; ++n) {
    for (int k = -2; k <= 2; ++k) {
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
          auto ab = a.multiply(a.basis(i), a.basis(j));
          auto Lnm = virasoro_L(m, n + k, ab, cutoff);
          Rational central = n + k == 0 ? Rational(n * n * n - n, 12) * a.integral(a.multiply(*a.euler_class(), ab))
                                        : Rational(0);
          for (const auto& v : basis) {
            auto rhs = CycNum(n - k) * Lnm.apply(v) - CycNum(central) * v;
            CHECK(commutator_on(L.at({n, i}), L.at({k, j}), v) == rhs);
          }
        }
      }
    }
  }
  (void)one;
}

TEST_CASE("boundary operator") {
  FockModel aff(builtin_model("affine-plane"));
  auto d = boundary_operator(aff, 4);
  auto vac = aff.vacuum();
  auto q = [&](int n) { return FockOperator::single(aff.space(), ModeOp{ModeOp::creation, n, false, {CycNum(1)}}); };
  CHECK(d.apply(vac).is_zero());
  CHECK(d.apply(q(1).apply(vac)).is_zero());
  CHECK(d.apply(q(1).apply(q(1).apply(vac))) == CycNum(-1) * q(2).apply(vac));
  // q_1 q_2: join n=1, m=2 and n=2, m=1, each -(1/2)·2.
  CHECK(d.apply(q(1).apply(q(2).apply(vac))) == CycNum(-2) * q(3).apply(vac));

  FockModel p2(builtin_model("p2"));
  CHECK_THROWS_AS(boundary_operator(p2, 3), wfk::ModelMismatch);
  FockModel flat(builtin_model("p2").with_canonical_class(std::nullopt));
  auto dp = boundary_operator(flat, 3);
  const auto& a = flat.algebra();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto L1 = virasoro_L(flat, 1, a.basis(i), 3);
    for (const auto& v : basis_vectors(flat.space(), 2)) {
      auto q1 = q_mode(flat, 1, a.basis(i));
      CHECK(dp.apply(q1.apply(v)) - q1.apply(dp.apply(v)) == L1.apply(v));
    }
  }
  // On a surface with K = 0 the full bracket [d, q_n(α)] = n L_n(α), odd classes included.
  FockModel ab(builtin_model("abelian-surface"));
  auto da = boundary_operator(ab, 4);
  std::mt19937 rng(8);
  auto basis = basis_vectors(ab.space(), 2);
  for (int trial = 0; trial < 6; ++trial) {
    auto x = random_element(ab.algebra(), rng, trial % 2);
    for (int n : {-2, -1, 1, 2}) {
      auto qn = q_mode(ab, n, x);
      auto Ln = virasoro_L(ab, n, x, 4);
      for (std::size_t b = 0; b < basis.size(); b += 5)
        CHECK(commutator_on(da, qn, basis[b]) == CycNum(n) * Ln.apply(basis[b]));
    }
  }
}

TEST_CASE("B classes") {
  FockModel m(builtin_model("p2"));
  const auto& a = m.algebra();
  auto one = a.unit();
  auto q1 = q_mode(m, 1, one);
  for (int n = 1; n <= 4; ++n) {
    FockVector top = m.vacuum();
    for (int r = 0; r < n; ++r) top = q1.apply(top);
    top = CycNum(Rational(1) / Rational(wfk::exact::factorial(n))) * top;
    CHECK(B_class(m, 0, one, n) == CycNum(n) * top);
    CHECK(B_class(m, n - 1, a.basis(1), n) == q_mode(m, n, a.basis(1)).apply(m.vacuum()));
  }
  CHECK_THROWS_AS(B_class(m, 3, one, 3), wfk::IndexOutOfRange);
  CHECK_THROWS_AS(B_class(m, -1, one, 3), wfk::IndexOutOfRange);
  // B classes and creation words built from their leading operators span each weight.
  std::map<int, std::vector<FockVector>> span{{0, {m.vacuum()}}};
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < n; ++i) {
      for (std::size_t b = 0; b < a.dim(); ++b) {
        span[n].push_back(B_class(m, i, a.basis(b), n));
        for (const auto& v : span[n - i - 1]) span[n].push_back(q_mode(m, i + 1, a.basis(b)).apply(v));
      }
    }
    auto monos = monomials_of_weight(*m.space(), n);
    wfk::exact::Matrix<CycNum> mat(span[n].size(), monos.size());
    for (std::size_t r = 0; r < span[n].size(); ++r)
      for (std::size_t c = 0; c < monos.size(); ++c) mat(r, c) = span[n][r].coefficient(monos[c]);
    CHECK(wfk::exact::rank(mat) == monos.size());
  }
}

TEST_CASE("Chern series") {
  FockModel m(builtin_model("p2"));
  const auto& a = m.algebra();
  Element c = a.unit() + Rational(2) * a.basis(1);
  auto s = chern_series(m, c, 4);
  auto vac = m.vacuum();
  auto q = [&](int n) { return q_mode(m, n, c); };
  CHECK(s[0] == vac);
  CHECK(s[1] == q(1).apply(vac));
  CHECK(s[2] == CycNum(Rational(1, 2)) * q(1).apply(q(1).apply(vac)) - CycNum(Rational(1, 2)) * q(2).apply(vac));
  for (int n = 0; n <= 4; ++n) CHECK(s[n].max_weight() == n);
}

TEST_CASE("graded dimensions") {
  CHECK(graded_dimension(1, 0, 5) == std::vector<long>{1, 1, 2, 3, 5, 7});
  CHECK(graded_dimension(0, 1, 5) == std::vector<long>{1, 1, 1, 2, 2, 3});
  CHECK(graded_dimension(0, 0, 3) == std::vector<long>{1, 0, 0, 0});
  FockModel m(builtin_model("p2"));
  CHECK(graded_dimension(*m.space(), 2) == std::vector<long>{1, 3, 9});
}
