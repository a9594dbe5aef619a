#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wfk/exact/rational.hpp"
#include "wfk/groups/classes.hpp"
#include "wfk/report.hpp"
#include "wfk/wreath/level.hpp"

namespace wfk::series {

using exact::Rational;

enum Var { q = 0, t = 1, x = 2, y = 3 };
using Exponent = std::array<int, 4>;

// Series in q truncated at q^order (inclusive); t, x, y exponents are polynomial per q-degree.
class PowerSeries {
 public:
  explicit PowerSeries(int order = 0) : order_(order) {}
  static PowerSeries one(int order);
  static PowerSeries monomial(int order, Exponent e, Rational c = 1);

  int order() const { return order_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponent& e) const;
  // All terms of q-degree n, with the q exponent kept.
  PowerSeries q_part(int n) const;
  void add(const Exponent& e, const Rational& c);

  PowerSeries& operator+=(const PowerSeries& o);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, PowerSeries a);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.terms_ == b.terms_; }

  // Substitute a number for one variable.
  PowerSeries evaluate(Var v, const Rational& value) const;
  // Substitute the variable `to` for `from`.
  PowerSeries rename(Var from, Var to) const;

  // (1 + c·m)^e truncated, for a monomial m of positive q-degree and any integer e.
  static PowerSeries binomial_power(int order, Exponent m, const Rational& c, long e);

  std::string to_string() const;

 private:
  int order_;
  std::map<Exponent, Rational> terms_;
};

// ∏_m (1+t^{2m−1}q^m)^{b₁}(1+t^{2m+1}q^m)^{b₃} / ((1−t^{2m−2}q^m)^{b₀}(1−t^{2m}q^m)^{b₂}(1−t^{2m+2}q^m)^{b₄}).
PowerSeries gottsche_poincare(const std::array<long, 5>& betti, int order);
// ∏_m (1+q^m)^{h_odd} / (1−q^m)^{h_ev}.
PowerSeries gottsche_dimension(long h_even, long h_odd, int order);
// ∏_m (1−q^m)^{−e}.
PowerSeries euler_product(long e, int order);
// ∏_r ∏_{s,t} (1 − x^s y^t q^r (xy)^{r−1})^{(−1)^{s+t+1} h^{s,t}}.
PowerSeries hodge_product(const std::map<std::pair<int, int>, long>& h, int order);

// Coefficients of q^0 … q^order for series in q alone.
std::vector<Rational> q_coefficients(const PowerSeries& s);

class GSet {
 public:
  // action[x * points + p] = x·p; axioms are checked.
  GSet(groups::GroupHandle g, std::size_t points, std::vector<std::uint32_t> action);
  static GSet trivial_action(groups::GroupHandle g, std::size_t points);

  const groups::GroupHandle& group() const { return g_; }
  std::size_t points() const { return points_; }
  const std::vector<std::uint32_t>& action() const { return action_; }

 private:
  groups::GroupHandle g_;
  std::size_t points_;
  std::vector<std::uint32_t> action_;
};

// (1/|G|) Σ_{gh=hg} |S^{g,h}|; throws NonIntegralResult, BudgetExceeded when |G| > budget.
long orbifold_euler_bruteforce(const GSet& s, std::size_t budget = 10000);

// Γ_n acting on Sⁿ by (g, s)·(x_i) = (g_i x_{s⁻¹(i)}).
GSet wreath_power(const GSet& s, int n, std::size_t budget = wreath::kDefaultBudget);

Report wreath_orbifold_euler_check(const GSet& s, int n_max, std::size_t budget = wreath::kDefaultBudget);

}  // namespace wfk::series
