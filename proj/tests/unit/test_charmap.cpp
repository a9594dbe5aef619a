#include <doctest.h>

#include "wfk/charmap/charmap.hpp"
#include "wfk/errors.hpp"
#include "wfk/fock/operators.hpp"
#include "wfk/groups/builtins.hpp"

using namespace wfk::charmap;
using wfk::exact::Rational;
using wfk::fock::Generator;
using wfk::fock::Monomial;
using wfk::groups::builtin_group;
namespace wr = wfk::wreath;

namespace {

FockVector rebase(const wfk::fock::SpaceHandle& s, const FockVector& v) {
  FockVector out(s);
  for (const auto& [m, c] : v.terms()) out.add(m, c);
  return out;
}

WreathClassFunction indicator(const wr::LevelHandle& lv, std::vector<std::vector<int>> parts) {
  wr::TypeFunction t;
  for (auto& p : parts) t.by_class.push_back(wr::Partition{p});
  return WreathClassFunction::indicator(lv, lv->index_of(t));
}

void require_pass(const wfk::Report& r) {
  int shown = 0;
  for (const auto& p : r.probes)
    if (!p.equal && shown++ < 5) MESSAGE(r.suite << " " << p.probe << ": " << p.lhs << " vs " << p.rhs);
  CHECK(r.failures() == 0);
  CHECK(r.pass());
}

}  // namespace

TEST_CASE("ch on basic classes") {
  auto triv = builtin_group("trivial");
  auto s = colored_space(triv);
  auto lv2 = wr::make_level(triv, 2);
  auto v = ch(indicator(lv2, {{2}}));
  FockVector want(s);
  want.add(Monomial{Generator{2, 0}}, CycNum(Rational(1, 2)));
  CHECK(v == want);

  CHECK(ch(WreathClassFunction::vacuum(triv)) == FockVector::vacuum(s));

  auto z2 = builtin_group("cyclic:2");
  for (int n = 1; n <= 3; ++n) {
    auto lv = wr::make_level(z2, n);
    for (int g = 0; g < 2; ++g) {
      auto gamma = ClassFunction::irreducible(z2, g);
      auto lhs = ch(wr::sigma_n(lv, gamma));
      auto rhs = p_mode(z2, n, gamma).apply(FockVector::vacuum(colored_space(z2)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("ch is an isometric ring map") {
  for (const char* name : {"trivial", "cyclic:2"}) {
    auto base = builtin_group(name);
    for (int n = 0; n <= 4; ++n) {
      auto lv = wr::make_level(base, n);
      for (std::size_t i = 0; i < lv->size(); ++i) {
        auto f = WreathClassFunction::indicator(lv, i);
        CHECK(ch_inverse(base, ch(f), n) == f);
        for (std::size_t j = 0; j < lv->size(); ++j) {
          auto g = WreathClassFunction::indicator(lv, j);
          CHECK(wr::inner_product(f, g) == colored_pairing(base, ch(f), ch(g)));
        }
      }
    }
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; a + b <= 4; ++b) {
        auto la = wr::make_level(base, a);
        auto lb = wr::make_level(base, b);
        for (std::size_t i = 0; i < la->size(); ++i)
          for (std::size_t j = 0; j < lb->size(); ++j) {
            auto f = WreathClassFunction::indicator(la, i);
            auto g = WreathClassFunction::indicator(lb, j);
            CHECK(ch(wr::induce(f, g)) == ch(f) * ch(g));
          }
      }
    }
  }
}

TEST_CASE("Heisenberg action transports through ch") {
  require_pass(verify_heisenberg_transport(builtin_group("cyclic:2"), 3, 1000000));
  require_pass(verify_heisenberg_transport(builtin_group("trivial"), 4, 1000000));
  auto empty = verify_heisenberg_transport(builtin_group("cyclic:2"), 0, 1000);
  CHECK(empty.probes.empty());
  CHECK(empty.pass());
}

TEST_CASE("K classes and delta_1") {
  auto triv = builtin_group("trivial");
  auto z2 = builtin_group("cyclic:2");
  CHECK_FALSE(k_class_type(z2, 1, 1, 1).has_value());
  auto t = k_class_type(z2, 1, 1, 3);
  REQUIRE(t.has_value());
  CHECK(t->by_class[1].parts == std::vector<int>{2});
  CHECK(t->by_class[0].parts == std::vector<int>{1});
  auto t0 = k_class_type(triv, 1, 0, 4);
  CHECK(t0->by_class[0].parts == std::vector<int>{2, 1, 1});

  auto s2 = wr::build_wreath(triv, 2);
  CHECK(delta_i(s2, 1, 0, indicator(s2.level, {{2}})) == indicator(s2.level, {{1, 1}}));

  auto g1 = wr::build_wreath(z2, 1);
  for (std::size_t j = 0; j < g1.level->size(); ++j)
    CHECK(delta_i(g1, 1, 1, WreathClassFunction::indicator(g1.level, j)).is_zero());

  // i = 0 with the identity class is multiplication by the class size 1.
  auto g3 = wr::build_wreath(z2, 3);
  for (std::size_t j = 0; j < g3.level->size(); ++j) {
    auto f = WreathClassFunction::indicator(g3.level, j);
    CHECK(delta_i(g3, 0, 0, f) == f);
    auto d = delta_i(g3, 1, 1, f);
    CHECK(d.level() == g3.level);
  }
}

TEST_CASE("cubic operator") {
  auto s = colored_space(builtin_group("trivial"));
  auto op = cubic_formula(4);
  CHECK(op.apply(FockVector::vacuum(s)).is_zero());
  FockVector p1(s);
  p1.add(Monomial{Generator{1, 0}}, CycNum(1));
  CHECK(op.apply(p1).is_zero());
  FockVector half_p2(s);
  half_p2.add(Monomial{Generator{2, 0}}, CycNum(Rational(1, 2)));
  FockVector want(s);
  want.add(Monomial{Generator{1, 0}, Generator{1, 0}}, CycNum(Rational(1, 2)));
  CHECK(op.apply(half_p2) == want);

  auto nop = cubic_from_normal_order(4);
  for (const auto& v : wfk::fock::basis_vectors(s, 4)) CHECK(op.apply(v) == nop.apply(v));

  require_pass(conv_cubic_check(5, 1000000));
}

TEST_CASE("Virasoro bracket from Delta_1 on Z/2") {
  auto z2 = builtin_group("cyclic:2");
  auto triv = builtin_group("trivial");
  CHECK(fw_prefactor(triv, 3, 0, 0) == CycNum(3));
  CHECK(fw_prefactor(z2, 1, 0, 1) == CycNum(2));
  CHECK(fw_prefactor(z2, -1, 1, 1) == CycNum(2));
  // The degree-2 character of S_3 vanishes on transpositions.
  auto s3 = builtin_group("symmetric:3");
  int two = -1, tau = -1;
  for (int g = 0; g < 3; ++g)
    for (int c = 0; c < 3; ++c)
      if (fw_prefactor(s3, 1, g, c).is_zero()) two = g, tau = c;
  REQUIRE(two >= 0);
  CHECK_THROWS_AS(fw_L(s3, 1, two, tau, 2, 100000), wfk::ZeroPrefactor);

  auto l1 = fw_L(z2, 1, 0, 1, 3, 100000);
  auto lm1 = fw_L(z2, -1, 0, 1, 3, 100000);
  auto l0 = fw_L(z2, 0, 0, 1, 3, 100000);
  auto br = wr::commutator(l1, lm1);
  for (const auto& [a, block] : br.blocks()) CHECK(block == CycNum(2) * l0.block(a));
  CHECK(wr::commutator(l1, l1).is_zero());

  require_pass(fw_virasoro_check(z2, 1, 1, 3, 100000));
}

TEST_CASE("Delta_1 Virasoro on S_n matches the single-colour normalization") {
  require_pass(fw_virasoro_check(builtin_group("trivial"), 0, 2, 4, 100000));
}

TEST_CASE("transfer property") {
  auto z2 = builtin_group("cyclic:2");
  const int levels = 3;
  auto ind = [&](int c) { return ClassFunction::indicator(z2, c); };
  auto bracket = [&](const ClassFunction& a, int n, const ClassFunction& b) {
    auto d = delta_operator(z2, 1, a, levels, 100000);
    return wr::commutator(d, wr::heisenberg_p(z2, n, b, levels, 100000));
  };
  for (int n : {-2, -1, 1, 2}) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        auto base_bracket = bracket(ind(a), n, ind(b));
        for (int u = 0; u < 2; ++u) {
          auto au = wfk::groups::convolution(ind(a), ind(u));
          // u * u = e on Z/2, so v = u * b keeps (a*u)*v = a*b.
          auto v = wfk::groups::convolution(ind(u), ind(b));
          CHECK(wfk::groups::convolution(au, v) == wfk::groups::convolution(ind(a), ind(b)));
          CHECK((bracket(au, n, v) - base_bracket).is_zero());
        }
      }
    }
  }
}

TEST_CASE("filtered convolution") {
  auto triv = builtin_group("trivial");
  auto s3 = wr::build_wreath(triv, 3);
  auto k21 = indicator(s3.level, {{2, 1}});
  CHECK(filtered_convolution(s3, k21, k21) == CycNum(3) * indicator(s3.level, {{3}}));
  auto unit = indicator(s3.level, {{1, 1, 1}});
  for (std::size_t j = 0; j < s3.level->size(); ++j) {
    auto f = WreathClassFunction::indicator(s3.level, j);
    CHECK(filtered_convolution(s3, f, unit) == f);
  }
  CHECK_THROWS_AS(filtered_convolution(wr::build_wreath(builtin_group("cyclic:2"), 2), WreathClassFunction{},
                                       WreathClassFunction{}),
                  wfk::InvalidInput);

  auto s4 = wr::build_wreath(triv, 4);
  const auto& lv = s4.level;
  for (std::size_t a = 0; a < lv->size(); ++a) {
    auto fa = WreathClassFunction::indicator(lv, a);
    for (std::size_t b = 0; b < lv->size(); ++b) {
      auto fb = WreathClassFunction::indicator(lv, b);
      auto ab = filtered_convolution(s4, fa, fb);
      CHECK(ab == filtered_convolution(s4, fb, fa));
      for (std::size_t j = 0; j < lv->size(); ++j)
        if (!ab[j].is_zero())
          CHECK(filtration_degree(lv->type(j)) == filtration_degree(lv->type(a)) + filtration_degree(lv->type(b)));
      for (std::size_t c = 0; c < lv->size(); ++c) {
        auto fc = WreathClassFunction::indicator(lv, c);
        CHECK(filtered_convolution(s4, ab, fc) == filtered_convolution(s4, fa, filtered_convolution(s4, fb, fc)));
      }
    }
  }
}

TEST_CASE("Lehn-Sorger transport") {
  for (int n = 1; n <= 5; ++n) require_pass(lehn_sorger_check(n, 1000000));

  auto triv = builtin_group("trivial");
  auto s2 = wr::build_wreath(triv, 2);
  auto k2 = indicator(s2.level, {{2}});
  CHECK(filtered_convolution(s2, k2, k2).is_zero());
  FockVector p2(colored_space(triv));
  p2.add(Monomial{Generator{2, 0}}, CycNum(1));
  wfk::fock::FockModel affine(wfk::fock::builtin_model("affine-plane"));
  CHECK(wfk::fock::boundary_operator(affine, 2).apply(p2).is_zero());
}

TEST_CASE("exponential formulas for eta and epsilon") {
  require_pass(exp_formula_check(builtin_group("trivial"), 4, 100000));
  require_pass(exp_formula_check(builtin_group("cyclic:2"), 4, 100000));

  wfk::fock::FockModel point(wfk::fock::builtin_model("point"));
  auto series = wfk::fock::chern_series(point, point.algebra().unit(), 4);
  auto triv = builtin_group("trivial");
  auto s = colored_space(triv);
  for (int n = 0; n <= 4; ++n) {
    auto eps = ch(wr::eta_eps(wr::make_level(triv, n), ClassFunction::trivial(triv), true));
    CHECK(rebase(s, series[n]) == eps);
  }
}
