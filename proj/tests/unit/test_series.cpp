#include <doctest.h>

#include "wfk/errors.hpp"
#include "wfk/fock/fock.hpp"
#include "wfk/groups/builtins.hpp"
#include "wfk/series/series.hpp"

using namespace wfk::series;
using wfk::groups::builtin_group;

namespace {

// Partition numbers from Euler's pentagonal recurrence.
std::vector<long> pentagonal_partitions(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long sign = k % 2 ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  }
  return p;
}

PowerSeries poly_t(std::vector<long> coeffs, int qdeg, int order) {
  PowerSeries s(order);
  for (std::size_t i = 0; i < coeffs.size(); ++i) s.add({qdeg, static_cast<int>(i), 0, 0}, coeffs[i]);
  return s;
}

}  // namespace

TEST_CASE("power series arithmetic") {
  auto a = PowerSeries::monomial(3, {1, 0, 0, 0});
  auto s = PowerSeries::one(3) + a;
  auto inv = PowerSeries::binomial_power(3, {1, 0, 0, 0}, 1, -1);
  CHECK(s * inv == PowerSeries::one(3));
  auto sq = s * s * s * s;
  CHECK(sq.coefficient({3, 0, 0, 0}) == 4);
  CHECK(sq.coefficient({4, 0, 0, 0}) == 0);
  CHECK((s - s).terms().empty());
  CHECK(PowerSeries::monomial(2, {1, 2, 0, 0}, 3).evaluate(t, -1).coefficient({1, 0, 0, 0}) == 3);
  CHECK(PowerSeries::monomial(2, {1, 0, 1, 2}).rename(x, t).rename(y, t).coefficient({1, 3, 0, 0}) == 1);
  CHECK(s.to_string() == "1 + q");
}

TEST_CASE("Euler product") {
  auto p = q_coefficients(euler_product(1, 12));
  auto want = pentagonal_partitions(12);
  for (int n = 0; n <= 12; ++n) CHECK(p[n] == want[n]);
  CHECK(euler_product(0, 6) == PowerSeries::one(6));
  auto two = q_coefficients(euler_product(2, 6));
  for (int n = 0; n <= 6; ++n) CHECK(two[n] == static_cast<long>(wfk::wreath::make_level(builtin_group("cyclic:2"), n)->size()));
  for (long e1 : {-2, 0, 1, 3})
    for (long e2 : {-1, 2, 5}) CHECK(euler_product(e1, 12) * euler_product(e2, 12) == euler_product(e1 + e2, 12));
}

TEST_CASE("Gottsche Poincare series") {
  std::array<long, 5> b{1, 2, 3, 4, 5};
  CHECK(gottsche_poincare(b, 4).q_part(1) == poly_t({1, 2, 3, 4, 5}, 1, 4));
  auto p2 = gottsche_poincare({1, 0, 1, 0, 1}, 6);
  CHECK(p2.q_part(2) == poly_t({1, 0, 2, 0, 3, 0, 2, 0, 1}, 2, 6));
  CHECK(p2.q_part(0) == PowerSeries::one(6));
  const std::array<long, 5> cases[] = {{1, 0, 1, 0, 1}, {1, 4, 6, 4, 1}, {1, 0, 22, 0, 1}, {1, 2, 2, 2, 1}};
  for (const auto& bb : cases) {
    auto g = gottsche_poincare(bb, 8);
    CHECK(g.evaluate(t, 1) == gottsche_dimension(bb[0] + bb[2] + bb[4], bb[1] + bb[3], 8));
    CHECK(g.evaluate(t, -1) == euler_product(bb[0] - bb[1] + bb[2] - bb[3] + bb[4], 8));
  }
  CHECK_THROWS_AS(gottsche_poincare({1, -1, 0, 0, 0}, 2), wfk::InvalidInput);
}

TEST_CASE("Fock graded dimensions match the dimension series") {
  const std::pair<long, long> profiles[] = {{1, 0}, {0, 1}, {3, 0}, {2, 2}};
  for (auto [ev, od] : profiles) {
    auto want = q_coefficients(gottsche_dimension(ev, od, 6));
    auto got = wfk::fock::graded_dimension(static_cast<int>(ev), static_cast<int>(od), 6);
    REQUIRE(got.size() == 7);
    for (int n = 0; n <= 6; ++n) CHECK(want[n] == got[n]);
  }
}

TEST_CASE("Hodge product") {
  std::map<std::pair<int, int>, long> p2{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}};
  auto h = hodge_product(p2, 4);
  PowerSeries e1(4);
  e1.add({1, 0, 0, 0}, 1);
  e1.add({1, 0, 1, 1}, 1);
  e1.add({1, 0, 2, 2}, 1);
  CHECK(h.q_part(1) == e1);
  auto g = gottsche_poincare({1, 0, 1, 0, 1}, 4);
  CHECK(h.rename(x, t).rename(y, t) == g);

  std::map<std::pair<int, int>, long> curve_like{{{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 2}, {{1, 1}, 1}};
  auto hc = hodge_product(curve_like, 3);
  PowerSeries ec(3);
  ec.add({1, 0, 0, 0}, 1);
  ec.add({1, 0, 1, 0}, -2);
  ec.add({1, 0, 0, 1}, -2);
  ec.add({1, 0, 1, 1}, 1);
  CHECK(hc.q_part(1) == ec);
  CHECK(hodge_product(curve_like, 3) == hc);
  CHECK(hc.evaluate(x, 1).evaluate(y, 1) == euler_product(-2, 3));
}

TEST_CASE("orbifold Euler numbers") {
  for (const char* name : {"cyclic:2", "cyclic:3", "symmetric:3", "binary-dihedral:2"}) {
    auto g = builtin_group(name);
    CHECK(orbifold_euler_bruteforce(GSet::trivial_action(g, 1)) == static_cast<long>(g->num_classes()));
  }
  CHECK(orbifold_euler_bruteforce(GSet::trivial_action(builtin_group("trivial"), 5)) == 5);
  auto z2 = builtin_group("cyclic:2");
  std::uint32_t e = z2->group().identity(), tau = 1 - e;
  std::vector<std::uint32_t> swap(4);
  swap[e * 2 + 0] = 0;
  swap[e * 2 + 1] = 1;
  swap[tau * 2 + 0] = 1;
  swap[tau * 2 + 1] = 0;
  CHECK(orbifold_euler_bruteforce(GSet(z2, 2, swap)) == 1);
  std::vector<std::uint32_t> bad(4, 0);
  CHECK_THROWS_AS(GSet(z2, 2, bad), wfk::InvalidInput);
  CHECK_THROWS_AS(orbifold_euler_bruteforce(GSet::trivial_action(z2, 1), 1), wfk::BudgetExceeded);
}

TEST_CASE("wreath orbifold Euler numbers follow the Euler product") {
  auto z2 = builtin_group("cyclic:2");
  auto point = wreath_orbifold_euler_check(GSet::trivial_action(z2, 1), 4);
  CHECK(point.pass());
  std::vector<std::string> want = {"1", "2", "5", "10", "20"};
  for (int n = 0; n <= 4; ++n) CHECK(point.probes[n].lhs == want[n]);
  CHECK(wreath_orbifold_euler_check(GSet::trivial_action(builtin_group("trivial"), 1), 4).pass());
  for (const char* name : {"trivial", "cyclic:2", "cyclic:3"}) {
    auto g = builtin_group(name);
    CHECK(wreath_orbifold_euler_check(GSet::trivial_action(g, 1), 4).pass());
    CHECK(wreath_orbifold_euler_check(GSet::trivial_action(g, 2), 4).pass());
  }
  std::uint32_t e = z2->group().identity(), tau = 1 - e;
  std::vector<std::uint32_t> swap(4);
  swap[e * 2 + 0] = 0;
  swap[e * 2 + 1] = 1;
  swap[tau * 2 + 0] = 1;
  swap[tau * 2 + 1] = 0;
  CHECK(wreath_orbifold_euler_check(GSet(z2, 2, swap), 4).pass());
}
