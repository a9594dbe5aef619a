// One line per acceptance criterion; exit status 0 only when all ten pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "wfk/charmap/charmap.hpp"
#include "wfk/exact/linalg.hpp"
#include "wfk/fock/verify.hpp"
#include "wfk/groups/builtins.hpp"
#include "wfk/mckay/mckay.hpp"
#include "wfk/series/series.hpp"
#include "wfk/wreath/heisenberg.hpp"

using wfk::Report;
using wfk::exact::Rational;
using wfk::groups::builtin_group;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t probes = 0;
  std::string note;

  void take(const Report& r) {
    probes += r.probes.size();
    if (!r.pass()) {
      pass = false;
      note += " " + r.suite + ":" + std::to_string(r.failures()) + " mismatches";
    }
  }
  void expect(bool ok, const std::string& what) {
    ++probes;
    if (!ok) {
      pass = false;
      note += " " + what;
    }
  }
};

Outcome criterion1() {
  Outcome o;
  for (const char* g : {"trivial", "cyclic:2"}) o.take(wfk::wreath::heisenberg_relations_report(builtin_group(g), 3, 2));
  return o;
}

Outcome criterion2() {
  Outcome o;
  wfk::fock::FockModel p2(wfk::fock::builtin_model("p2"));
  o.expect(p2.algebra().integral(*p2.algebra().euler_class()) == 3, "euler class of P2");
  o.take(wfk::fock::heisenberg_report(p2, 2, 3));
  o.take(wfk::fock::virasoro_report(p2, 2, 3));
  return o;
}

Outcome criterion3() {
  Outcome o;
  o.take(wfk::charmap::conv_cubic_check(5));
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto z2 = builtin_group("cyclic:2");
  int tau = -1;
  for (std::size_t c = 0; c < z2->num_classes(); ++c)
    if (z2->classes().class_reps[c] != z2->group().identity()) tau = static_cast<int>(c);
  auto r = wfk::charmap::fw_virasoro_check(z2, tau, 1, 4);
  o.take(r);
  o.expect(r.skipped.empty(), "unexpected zero prefactor");
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const char* g : {"trivial", "cyclic:2"}) o.take(wfk::charmap::exp_formula_check(builtin_group(g), 4));
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) o.take(wfk::charmap::lehn_sorger_check(n));
  o.take(wfk::charmap::filtered_product_check(4));
  return o;
}

Outcome criterion7() {
  Outcome o;
  const std::pair<const char*, const char*> cases[] = {
      {"cyclic:2", "A1~"},          {"cyclic:3", "A2~"},           {"cyclic:6", "A5~"},
      {"binary-dihedral:2", "D4~"}, {"binary-dihedral:3", "D5~"},  {"binary-dihedral:5", "D7~"},
      {"binary-tetrahedral", "E6~"}, {"binary-octahedral", "E7~"}, {"binary-icosahedral", "E8~"}};
  for (const auto& [name, type] : cases) {
    auto d = wfk::mckay::mckay_data(builtin_group(name));
    std::string got;
    try {
      got = wfk::mckay::classify_affine_ade(d.cartan);
    } catch (const wfk::NotAffineADE& e) {
      got = e.what();
    }
    o.expect(got == type, std::string(name) + " classified as " + got);
    const std::size_t k = d.cartan.size();
    wfk::exact::Matrix<Rational> c(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      long row = 0;
      for (std::size_t j = 0; j < k; ++j) {
        row += d.cartan[i][j] * d.marks[j];
        c(i, j) = Rational(d.cartan[i][j]);
      }
      o.expect(row == 0, std::string(name) + " C.delta != 0");
    }
    o.expect(wfk::exact::rank(c) + 1 == k, std::string(name) + " corank");
  }
  auto ico = builtin_group("binary-icosahedral");
  o.expect(ico->order() == 120 && ico->characters().size() == 9, "binary icosahedral size");
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const char* g : {"cyclic:2", "cyclic:3"})
    for (int n = 1; n <= 3; ++n) o.take(wfk::mckay::koszul_thom_check(builtin_group(g), n));
  return o;
}

Outcome criterion9() {
  Outcome o;
  using wfk::series::GSet;
  for (const char* g : {"trivial", "cyclic:2", "cyclic:3"})
    for (std::size_t points : {1, 2}) o.take(wfk::series::wreath_orbifold_euler_check(GSet::trivial_action(builtin_group(g), points), 4));
  auto z2 = builtin_group("cyclic:2");
  std::uint32_t e = z2->group().identity(), t = 1 - e;
  std::vector<std::uint32_t> swap(4);
  swap[e * 2] = 0, swap[e * 2 + 1] = 1, swap[t * 2] = 1, swap[t * 2 + 1] = 0;
  o.take(wfk::series::wreath_orbifold_euler_check(GSet(z2, 2, swap), 4));
  auto point = wfk::series::wreath_orbifold_euler_check(GSet::trivial_action(z2, 1), 4);
  const char* want[] = {"1", "2", "5", "10", "20"};
  for (int n = 0; n <= 4; ++n) o.expect(point.probes[n].lhs == want[n], "Z/2 point value at n=" + std::to_string(n));
  return o;
}

Outcome criterion10() {
  Outcome o;
  using namespace wfk::series;
  auto p2 = gottsche_poincare({1, 0, 1, 0, 1}, 6);
  PowerSeries want(6);
  const long coeffs[] = {1, 0, 2, 0, 3, 0, 2, 0, 1};
  for (int k = 0; k <= 8; ++k) want.add({2, k, 0, 0}, coeffs[k]);
  o.expect(p2.q_part(2) == want, "q^2 coefficient " + p2.q_part(2).to_string());
  const std::array<long, 5> bettis[] = {{1, 0, 1, 0, 1}, {1, 4, 6, 4, 1}, {1, 0, 22, 0, 1}, {1, 2, 2, 2, 1}};
  for (const auto& b : bettis) {
    auto g = gottsche_poincare(b, 8);
    o.expect(g.evaluate(t, 1) == gottsche_dimension(b[0] + b[2] + b[4], b[1] + b[3], 8), "t=1 specialization");
    o.expect(g.evaluate(t, -1) == euler_product(b[0] - b[1] + b[2] - b[3] + b[4], 8), "t=-1 specialization");
  }
  const std::pair<int, int> profiles[] = {{1, 0}, {0, 1}, {3, 0}, {2, 2}};
  for (auto [ev, od] : profiles) {
    auto series = q_coefficients(gottsche_dimension(ev, od, 6));
    auto dims = wfk::fock::graded_dimension(ev, od, 6);
    bool same = dims.size() == series.size();
    for (std::size_t n = 0; same && n < dims.size(); ++n) same = series[n] == dims[n];
    o.expect(same, "graded dimension profile (" + std::to_string(ev) + "," + std::to_string(od) + ")");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"wreath Heisenberg relations, trivial and Z/2, |k|,|l| <= 3, levels <= 2", criterion1},
      {"Fock Heisenberg and Virasoro on P2, |n|,|m| <= 2, weight <= 3", criterion2},
      {"convolution by transpositions equals the cubic operator, S_n, n <= 5", criterion3},
      {"Delta_1 Virasoro bracket, Z/2, c = [tau], |n| <= 1, levels <= 4", criterion4},
      {"exponential formulas for eta_n and epsilon_n, trivial and Z/2, n <= 4", criterion5},
      {"Lehn-Sorger transport n <= 5, filtered product ring on S_4", criterion6},
      {"McKay correspondence for the built-in SL2 subgroups", criterion7},
      {"Koszul-Thom identity, Z/2 and Z/3, n <= 3", criterion8},
      {"orbifold Euler numbers of wreath powers, n <= 4", criterion9},
      {"Gottsche series and Fock graded dimensions", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string(" threw: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu  %s  [%zu probes, %.2f s]%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.probes, secs, o.note.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
