#include "wfk/series/series.hpp"

#include "wfk/errors.hpp"
#include "wfk/kernels/kernels.hpp"
#include "wfk/wreath/wreath_group.hpp"

namespace wfk::series {

PowerSeries PowerSeries::one(int order) { return monomial(order, {0, 0, 0, 0}); }

PowerSeries PowerSeries::monomial(int order, Exponent e, Rational c) {
  PowerSeries s(order);
  s.add(e, c);
  return s;
}

Rational PowerSeries::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

PowerSeries PowerSeries::q_part(int n) const {
  PowerSeries s(order_);
  for (const auto& [e, c] : terms_)
    if (e[q] == n) s.terms_.emplace(e, c);
  return s;
}

void PowerSeries::add(const Exponent& e, const Rational& c) {
  if (e[q] > order_ || c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  order_ = std::min(order_, o.order_);
  for (const auto& [e, c] : o.terms_) add(e, c);
  for (auto it = terms_.begin(); it != terms_.end();) it = (*it).first[q] > order_ ? terms_.erase(it) : std::next(it);
  return *this;
}

PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a += Rational(-1) * b; }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order_, b.order_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      out.add(e, ca * cb);
    }
  return out;
}

PowerSeries operator*(const Rational& s, PowerSeries a) {
  if (s == 0) a.terms_.clear();
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

PowerSeries PowerSeries::evaluate(Var v, const Rational& value) const {
  PowerSeries out(order_);
  for (const auto& [e, c] : terms_) {
    Rational f = c;
    for (int k = 0; k < e[v]; ++k) f *= value;
    Exponent e2 = e;
    e2[v] = 0;
    out.add(e2, f);
  }
  return out;
}

PowerSeries PowerSeries::rename(Var from, Var to) const {
  PowerSeries out(order_);
  for (const auto& [e, c] : terms_) {
    Exponent e2 = e;
    e2[to] += e2[from];
    e2[from] = 0;
    out.add(e2, c);
  }
  return out;
}

PowerSeries PowerSeries::binomial_power(int order, Exponent m, const Rational& c, long e) {
  if (m[q] <= 0) throw InvalidInput("binomial expansion needs positive q-degree");
  PowerSeries out(order);
  Rational binom = 1;
  Rational cpow = 1;
  for (int k = 0; k * m[q] <= order; ++k) {
    if (k > 0) {
      binom = binom * Rational(e - k + 1) / Rational(k);
      cpow *= c;
      if (binom == 0) break;
    }
    out.add(Exponent{k * m[0], k * m[1], k * m[2], k * m[3]}, binom * cpow);
  }
  return out;
}

std::string PowerSeries::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[] = {"q", "t", "x", "y"};
  std::string s;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string mono;
    for (int v = 0; v < 4; ++v) {
      if (e[v] == 0) continue;
      mono += mono.empty() ? "" : "*";
      mono += names[v];
      if (e[v] != 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      s += a.get_str();
    } else {
      s += a == 1 ? mono : a.get_str() + "*" + mono;
    }
  }
  return s;
}

PowerSeries gottsche_poincare(const std::array<long, 5>& b, int order) {
  for (long x : b)
    if (x < 0) throw InvalidInput("Betti numbers must be non-negative");
  auto s = PowerSeries::one(order);
  for (int m = 1; m <= order; ++m) {
    s = s * PowerSeries::binomial_power(order, {m, 2 * m - 1, 0, 0}, 1, b[1]);
    s = s * PowerSeries::binomial_power(order, {m, 2 * m + 1, 0, 0}, 1, b[3]);
    s = s * PowerSeries::binomial_power(order, {m, 2 * m - 2, 0, 0}, -1, -b[0]);
    s = s * PowerSeries::binomial_power(order, {m, 2 * m, 0, 0}, -1, -b[2]);
    s = s * PowerSeries::binomial_power(order, {m, 2 * m + 2, 0, 0}, -1, -b[4]);
  }
  return s;
}

PowerSeries gottsche_dimension(long h_even, long h_odd, int order) {
  auto s = PowerSeries::one(order);
  for (int m = 1; m <= order; ++m) {
    s = s * PowerSeries::binomial_power(order, {m, 0, 0, 0}, 1, h_odd);
    s = s * PowerSeries::binomial_power(order, {m, 0, 0, 0}, -1, -h_even);
  }
  return s;
}

PowerSeries euler_product(long e, int order) { return gottsche_dimension(e, 0, order); }

PowerSeries hodge_product(const std::map<std::pair<int, int>, long>& h, int order) {
  auto s = PowerSeries::one(order);
  for (int r = 1; r <= order; ++r) {
    for (const auto& [st, hst] : h) {
      if (hst == 0) continue;
      const auto [a, b] = st;
      long e = ((a + b + 1) % 2 == 0 ? 1 : -1) * hst;
      s = s * PowerSeries::binomial_power(order, {r, 0, a + r - 1, b + r - 1}, -1, e);
    }
  }
  return s;
}

std::vector<Rational> q_coefficients(const PowerSeries& s) {
  std::vector<Rational> out(s.order() + 1, Rational(0));
  for (const auto& [e, c] : s.terms()) {
    if (e[t] || e[x] || e[y]) throw InvalidInput("series is not in q alone");
    out[e[q]] += c;
  }
  return out;
}

GSet::GSet(groups::GroupHandle g, std::size_t points, std::vector<std::uint32_t> action)
    : g_(std::move(g)), points_(points), action_(std::move(action)) {
  const auto& grp = g_->group();
  const std::size_t n = grp.order();
  if (action_.size() != n * points_) throw InvalidInput("action table has the wrong size");
  for (std::size_t p = 0; p < points_; ++p) {
    if (action_[grp.identity() * points_ + p] != p) throw InvalidInput("identity does not act trivially");
    for (std::size_t a = 0; a < n; ++a)
      if (action_[a * points_ + p] >= points_) throw InvalidInput("action leaves the set");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t p = 0; p < points_; ++p)
        if (action_[grp.mul(a, b) * points_ + p] != action_[a * points_ + action_[b * points_ + p]])
          throw InvalidInput("action is not compatible with the group law");
}

GSet GSet::trivial_action(groups::GroupHandle g, std::size_t points) {
  std::vector<std::uint32_t> act(g->group().order() * points);
  for (std::size_t a = 0; a < g->group().order(); ++a)
    for (std::size_t p = 0; p < points; ++p) act[a * points + p] = static_cast<std::uint32_t>(p);
  return GSet(g, points, std::move(act));
}

long orbifold_euler_bruteforce(const GSet& s, std::size_t budget) {
  const auto& grp = s.group()->group();
  const auto& cls = s.group()->classes();
  if (grp.order() > budget) throw BudgetExceeded("group order exceeds the orbifold Euler budget");
  std::vector<std::uint32_t> inverse(grp.order());
  for (std::size_t x = 0; x < grp.order(); ++x) inverse[x] = grp.inv(static_cast<std::uint32_t>(x));
  kernels::ClassView view{grp.table().data(), inverse.data(), grp.order(),
                          cls.class_of.data(), cls.class_reps.data(), cls.size()};
  std::int64_t raw =
      kernels::commuting_fixed_point_sum(view, s.action().data(), s.points(), cls.class_sizes.data());
  const auto order = static_cast<std::int64_t>(grp.order());
  if (raw % order != 0) throw NonIntegralResult("commuting-pair sum is not divisible by the group order");
  return static_cast<long>(raw / order);
}

GSet wreath_power(const GSet& s, int n, std::size_t budget) {
  auto w = wreath::build_wreath(s.group(), n, budget);
  const std::size_t p = s.points();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  const std::size_t order = w.group->group().order();
  std::vector<std::uint32_t> act(order * total);
  std::vector<std::size_t> digits(n), out(n);
  for (std::size_t a = 0; a < order; ++a) {
    auto el = w.element(static_cast<std::uint32_t>(a));
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (int i = n - 1; i >= 0; --i) {
        digits[i] = c % p;
        c /= p;
      }
      // Point i moves to slot s(i) and is then acted on by g_{s(i)}.
      for (int i = 0; i < n; ++i) out[el.s[i]] = s.action()[el.g[el.s[i]] * p + digits[i]];
      std::size_t image = 0;
      for (int i = 0; i < n; ++i) image = image * p + out[i];
      act[a * total + code] = static_cast<std::uint32_t>(image);
    }
  }
  return GSet(w.group, total, std::move(act));
}

Report wreath_orbifold_euler_check(const GSet& s, int n_max, std::size_t budget) {
  Report r;
  r.suite = "wreath-orbifold-euler";
  auto rhs = q_coefficients(euler_product(orbifold_euler_bruteforce(s), n_max));
  for (int n = 0; n <= n_max; ++n) {
    long lhs = orbifold_euler_bruteforce(wreath_power(s, n, budget), budget);
    r.add("n=" + std::to_string(n), std::to_string(lhs), rhs[n].get_str(), Rational(lhs) == rhs[n]);
  }
  return r;
}

}  // namespace wfk::series
