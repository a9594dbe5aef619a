#include <doctest.h>

#include <algorithm>
#include <chrono>

#include "wfk/errors.hpp"
#include "wfk/groups/builtins.hpp"
#include "wfk/groups/class_function.hpp"
#include "wfk/groups/json.hpp"
#include "wfk/kernels/kernels.hpp"

using namespace wfk::groups;
using wfk::exact::CycNum;
using wfk::exact::Rational;

namespace {

std::vector<std::int64_t> sorted_sizes(const GroupHandle& g) {
  auto s = g->classes().class_sizes;
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<GroupHandle> sl2_builtins() {
  return {builtin_group("cyclic:2"), builtin_group("cyclic:3"), builtin_group("cyclic:5"),
          builtin_group("binary-dihedral:2"), builtin_group("binary-dihedral:3"),
          builtin_group("binary-tetrahedral"), builtin_group("binary-octahedral"),
          builtin_group("binary-icosahedral")};
}

// Brute-force value of a class function at an element.
CycNum at(const ClassFunction& f, std::uint32_t x) { return f[f.group()->classes().class_of[x]]; }

}  // namespace

TEST_CASE("generator closures have the expected orders") {
  CHECK(cyclic(5).order() == 5);
  CHECK(binary_dihedral(2).order() == 8);
  CHECK(binary_dihedral(3).order() == 12);
  CHECK(binary_tetrahedral().order() == 24);
  CHECK(binary_octahedral().order() == 48);
  CHECK(binary_icosahedral().order() == 120);
  CHECK_THROWS_AS(build_from_generators({Mat2{CycNum::root_of_unity(7), 0, 0, CycNum::root_of_unity(7, -1)}}, 5),
                  wfk::ClosureBoundExceeded);
  CHECK_THROWS_AS(build_from_generators({Mat2{1, 1, 1, 1}}), wfk::NonInvertibleMatrix);
}

TEST_CASE("conjugacy classes") {
  auto z3 = builtin_group("cyclic:3");
  CHECK(z3->num_classes() == 3);
  CHECK(sorted_sizes(z3) == std::vector<std::int64_t>{1, 1, 1});
  auto s3 = builtin_group("symmetric:3");
  CHECK(sorted_sizes(s3) == std::vector<std::int64_t>{1, 2, 3});
  auto q8 = builtin_group("binary-dihedral:2");
  CHECK(q8->num_classes() == 5);
  for (const auto& g : sl2_builtins()) {
    const auto& cd = g->classes();
    std::int64_t total = 0;
    for (std::size_t c = 0; c < cd.size(); ++c) {
      total += cd.class_sizes[c];
      CHECK(cd.class_sizes[c] * cd.centralizer_orders[c] == static_cast<std::int64_t>(g->order()));
      // rep(inverse_class(c)) is conjugate to rep(c)⁻¹
      CHECK(cd.class_of[g->group().inv(cd.class_reps[c])] == cd.inverse_class[c]);
    }
    CHECK(total == static_cast<std::int64_t>(g->order()));
  }
}

TEST_CASE("serial and parallel kernels agree") {
  auto g = builtin_group("binary-octahedral");
  const auto& fg = g->group();
  std::vector<std::uint32_t> inv(fg.order());
  for (std::uint32_t x = 0; x < fg.order(); ++x) inv[x] = fg.inv(x);
  CHECK(wfk::kernels::conjugacy_orbits(fg.table().data(), inv.data(), fg.order(), wfk::kernels::Exec::serial) ==
        wfk::kernels::conjugacy_orbits(fg.table().data(), inv.data(), fg.order(), wfk::kernels::Exec::parallel));
  wfk::kernels::ClassView view{fg.table().data(), inv.data(), fg.order(), g->classes().class_of.data(),
                               g->classes().class_reps.data(), g->num_classes()};
  CHECK(wfk::kernels::class_structure_constants(view, wfk::kernels::Exec::serial) ==
        wfk::kernels::class_structure_constants(view, wfk::kernels::Exec::parallel));
}

TEST_CASE("character tables of small groups") {
  auto z2 = builtin_group("cyclic:2");
  const auto& t2 = z2->characters();
  REQUIRE(t2.size() == 2);
  CHECK(t2.irreducibles[0] == std::vector<CycNum>{1, 1});
  CHECK(t2.irreducibles[1] == std::vector<CycNum>{1, -1});

  auto s3 = builtin_group("symmetric:3");
  const auto& t3 = s3->characters();
  CHECK(t3.degrees == std::vector<int>{1, 1, 2});
  int transposition = -1;
  for (std::size_t c = 0; c < s3->num_classes(); ++c)
    if (s3->classes().class_sizes[c] == 3) transposition = static_cast<int>(c);
  CHECK(t3.irreducibles[2][transposition] == CycNum(0));

  auto q8 = builtin_group("binary-dihedral:2");
  CHECK(q8->characters().degrees == std::vector<int>{1, 1, 1, 1, 2});
}

TEST_CASE("orthonormality, degrees and central idempotents on all builtins") {
  auto start = std::chrono::steady_clock::now();
  for (const auto& g : sl2_builtins()) {
    const auto& t = g->characters();
    CHECK(t.size() == g->num_classes());
    long sum = 0;
    for (int d : t.degrees) sum += static_cast<long>(d) * d;
    CHECK(sum == static_cast<long>(g->order()));
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto chi = ClassFunction::irreducible(g, static_cast<int>(i));
      CHECK(chi[0] == CycNum(t.degrees[i]));
      for (std::size_t j = 0; j < t.size(); ++j) {
        CHECK(inner_product(chi, ClassFunction::irreducible(g, static_cast<int>(j))) == CycNum(i == j ? 1 : 0));
      }
      auto conv = convolution(chi, chi);
      CHECK(conv == CycNum(wfk::exact::make_rational(static_cast<long>(g->order()), t.degrees[i])) * chi);
    }
    // Column orthogonality with weights ζ_c.
    const auto& cd = g->classes();
    for (std::size_t a = 0; a < cd.size(); ++a) {
      for (std::size_t b = 0; b < cd.size(); ++b) {
        CycNum s(0);
        for (std::size_t i = 0; i < t.size(); ++i) s += t.irreducibles[i][a] * t.irreducibles[i][b].conjugate();
        CHECK(s == CycNum(a == b ? cd.centralizer_orders[a] : 0));
      }
    }
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 300.0);
}

TEST_CASE("inner products") {
  auto z3 = builtin_group("cyclic:3");
  auto z4 = builtin_group("cyclic:4");
  auto q8 = builtin_group("binary-dihedral:2");
  CHECK(inner_product(ClassFunction::regular(z3), ClassFunction::trivial(z3)) == CycNum(1));
  auto q = ClassFunction::matrix_trace(q8);
  CHECK(inner_product(q, q) == CycNum(1));
  // Brute force over the elements of ℤ/4: (1/4) Σ tr(x) tr(x⁻¹).
  const auto& fg = z4->group();
  CycNum brute(0);
  for (std::uint32_t x = 0; x < fg.order(); ++x)
    brute += (*fg.matrices())[x].trace() * (*fg.matrices())[fg.inv(x)].trace();
  brute /= CycNum(4);
  auto q4 = ClassFunction::matrix_trace(z4);
  CHECK(brute == CycNum(2));
  CHECK(inner_product(q4, q4) == brute);
  CHECK_THROWS_AS(inner_product(q4, ClassFunction::trivial(z3)), wfk::GroupMismatch);
  CHECK_THROWS_AS(ClassFunction::matrix_trace(builtin_group("symmetric:3")), wfk::MissingMatrixModel);
}

TEST_CASE("convolution against brute force") {
  auto s3 = builtin_group("symmetric:3");
  const auto& fg = s3->group();
  const auto& cd = s3->classes();
  int transposition = -1, three = -1;
  for (std::size_t c = 0; c < cd.size(); ++c) {
    if (cd.class_sizes[c] == 3) transposition = static_cast<int>(c);
    if (cd.class_sizes[c] == 2) three = static_cast<int>(c);
  }
  auto k2 = ClassFunction::indicator(s3, transposition);
  auto got = convolution(k2, k2);
  // Brute force: (f*g)(x) = Σ_y f(xy⁻¹)g(y).
  for (std::size_t c = 0; c < cd.size(); ++c) {
    std::uint32_t x = cd.class_reps[c];
    CycNum s(0);
    for (std::uint32_t y = 0; y < fg.order(); ++y) s += at(k2, fg.mul(x, fg.inv(y))) * at(k2, y);
    CHECK(got[c] == s);
  }
  CHECK(got == CycNum(3) * ClassFunction::indicator(s3, 0) + CycNum(3) * ClassFunction::indicator(s3, three));
  auto f = ClassFunction::irreducible(s3, 2) + CycNum(5) * k2;
  CHECK(convolution(f, ClassFunction::indicator(s3, 0)) == f);
}

TEST_CASE("class sums commute and associate") {
  for (const auto& spec : {"symmetric:4", "binary-tetrahedral", "binary-octahedral", "binary-dihedral:3"}) {
    auto g = builtin_group(spec);
    int k = static_cast<int>(g->num_classes());
    for (int a = 0; a < k; ++a) {
      auto ka = ClassFunction::indicator(g, a);
      for (int b = 0; b < k; ++b) {
        auto kb = ClassFunction::indicator(g, b);
        auto ab = convolution(ka, kb);
        CHECK(ab == convolution(kb, ka));
        int c = (a + b) % k;
        auto kc = ClassFunction::indicator(g, c);
        CHECK(convolution(ab, kc) == convolution(ka, convolution(kb, kc)));
      }
    }
  }
}

TEST_CASE("group json round trip and validation") {
  auto g = binary_dihedral(2);
  auto back = group_from_json(group_to_json(g));
  CHECK(back.order() == 8);
  CHECK(back.table() == g.table());
  auto j = group_to_json(symmetric(3));
  j["mult"][1][1] = 1;
  CHECK_THROWS_AS(group_from_json(j), wfk::InvalidInput);
}

TEST_CASE("direct products") {
  auto g = make_group(direct_product(cyclic(2), symmetric(3)));
  CHECK(g->order() == 12);
  CHECK(g->num_classes() == 6);
  CHECK(g->characters().degrees == std::vector<int>{1, 1, 1, 1, 2, 2});
}
