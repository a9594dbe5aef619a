#include "wfk/fock/verify.hpp"

#include <map>

namespace wfk::fock {

using exact::CycNum;
using exact::Rational;

namespace {

std::string mode_name(const char* op, int n, const std::string& label) {
  return std::string(op) + "_" + std::to_string(n) + "(" + label + ")";
}

}  // namespace

Report heisenberg_report(const FockModel& m, int modes, int cutoff) {
  Report r;
  r.suite = "fock-heisenberg";
  const auto& a = m.algebra();
  auto basis = basis_vectors(m.space(), cutoff);
  for (int n = -modes; n <= modes; ++n) {
    for (int k = -modes; k <= modes; ++k) {
      if (n == 0 || k == 0) continue;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
          auto qa = q_mode(m, n, a.basis(i)), qb = q_mode(m, k, a.basis(j));
          Rational c = n + k == 0 ? n * a.integral(a.multiply(a.basis(i), a.basis(j))) : Rational(0);
          for (const auto& v : basis) {
            auto lhs = supercommutator(qa, qb, v);
            auto rhs = CycNum(c) * v;
            r.add("[" + mode_name("q", n, a.labels()[i]) + ", " + mode_name("q", k, a.labels()[j]) + "] on " +
                      v.to_string(),
                  lhs.to_string(), rhs.to_string(), lhs == rhs);
          }
        }
      }
    }
  }
  return r;
}

Report virasoro_report(const FockModel& m, int modes, int cutoff) {
  Report r;
  r.suite = "fock-virasoro";
  const auto& a = m.algebra();
  const int w = cutoff + 2 * modes;
  auto basis = basis_vectors(m.space(), cutoff);
  const Element c2 = a.euler_class() ? *a.euler_class() : a.zero();
  std::map<std::pair<int, std::size_t>, FockOperator> L;
  for (int n = -modes; n <= modes; ++n)
    for (std::size_t i = 0; i < a.dim(); ++i) L.emplace(std::make_pair(n, i), virasoro_L(m, n, a.basis(i), w));
  for (int n = -modes; n <= modes; ++n) {
    for (int k = -modes; k <= modes; ++k) {
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
          auto ab = a.multiply(a.basis(i), a.basis(j));
          auto lnk = virasoro_L(m, n + k, ab, w);
          Rational central =
              n + k == 0 ? Rational(n * n * n - n, 12) * a.integral(a.multiply(c2, ab)) : Rational(0);
          for (const auto& v : basis) {
            auto lhs = supercommutator(L.at({n, i}), L.at({k, j}), v);
            auto rhs = CycNum(n - k) * lnk.apply(v) - CycNum(central) * v;
            r.add("[" + mode_name("L", n, a.labels()[i]) + ", " + mode_name("L", k, a.labels()[j]) + "] on " +
                      v.to_string(),
                  lhs.to_string(), rhs.to_string(), lhs == rhs);
          }
        }
      }
    }
  }
  return r;
}

Report boundary_report(const FockModel& m, int modes, int cutoff) {
  Report r;
  r.suite = "fock-boundary";
  const auto& a = m.algebra();
  auto d = boundary_operator(m, cutoff + modes);
  auto basis = basis_vectors(m.space(), cutoff);
  for (int n = -modes; n <= modes; ++n) {
    if (n == 0) continue;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      auto qn = q_mode(m, n, a.basis(i));
      auto ln = virasoro_L(m, n, a.basis(i), cutoff + modes);
      for (const auto& v : basis) {
        auto lhs = supercommutator(d, qn, v);
        auto rhs = CycNum(n) * ln.apply(v);
        r.add("[d, " + mode_name("q", n, a.labels()[i]) + "] on " + v.to_string(), lhs.to_string(), rhs.to_string(),
              lhs == rhs);
      }
    }
  }
  return r;
}

}  // namespace wfk::fock
