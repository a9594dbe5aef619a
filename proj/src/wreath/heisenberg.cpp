#include "wfk/wreath/heisenberg.hpp"

#include <algorithm>
#include <numeric>

#include "wfk/errors.hpp"

namespace wfk::wreath {

namespace {

using Pair = std::pair<int, int>;
// For each type of the target level, multiplicities of (type on the first block, type on the second).
using SplitTable = std::vector<std::map<Pair, long>>;

std::uint64_t binomial_u(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

void check_budget(std::uint64_t work, std::size_t budget, const std::string& what) {
  if (work > budget)
    throw BudgetExceeded(what + " needs " + std::to_string(work) + " enumerated elements, budget is " +
                         std::to_string(budget));
}

WreathElement block(const WreathElement& y, int from, int len) {
  WreathElement b;
  b.g.assign(y.g.begin() + from, y.g.begin() + from + len);
  b.s.resize(len);
  for (int i = 0; i < len; ++i) b.s[i] = y.s[from + i] - from;
  return b;
}

// Coset sum: for x of type τ, all shuffles t with t⁻¹xt ∈ Γ_n × Γ_m.
SplitTable induction_splits(const GroupHandle& base, const WreathLevel& ln, const WreathLevel& lm,
                            const WreathLevel& lN, std::size_t budget) {
  const int n = ln.n(), m = lm.n(), N = n + m;
  check_budget(lN.size() * binomial_u(N, n), budget, "induction");
  const auto& G = base->group();
  SplitTable table(lN.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t tau = 0; tau < lN.size(); ++tau) {
    WreathElement x = representative(*base, lN.type(tau));
    std::vector<char> choose(N, 0);
    std::fill(choose.begin(), choose.begin() + n, 1);
    do {
      WreathElement t = identity_element(G, N);
      int a = 0, b = n;
      for (int i = 0; i < N; ++i) {
        if (choose[i]) t.s[a++] = i;
        else t.s[b++] = i;
      }
      WreathElement y = multiply(G, multiply(G, inverse(G, t), x), t);
      bool stable = true;
      for (int i = 0; i < n && stable; ++i) stable = y.s[i] < n;
      if (!stable) continue;
      int i1 = ln.index_of(type_of(*base, block(y, 0, n)));
      int i2 = lm.index_of(type_of(*base, block(y, n, m)));
      table[tau][{i1, i2}] += 1;
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return table;
}

// For each type σ of level m−k: multiplicities of (cycle-product class of x, type of (x⁻¹, y_σ))
// over the k-cycles x ∈ Γ_k.
SplitTable restriction_splits(const GroupHandle& base, int k, const WreathLevel& lm, const WreathLevel& low,
                              std::size_t budget) {
  const auto& G = base->group();
  const std::size_t bo = G.order();
  std::uint64_t cycles = 1;
  for (int i = 0; i < k; ++i) cycles *= bo;
  for (int i = 2; i < k; ++i) cycles *= static_cast<std::uint64_t>(i);
  check_budget(cycles * low.size(), budget, "restriction");

  // All k-cycles as permutations of {0..k-1}: 0 → a_1 → … → a_{k-1} → 0.
  std::vector<std::vector<int>> kcycles;
  std::vector<int> order(k > 0 ? k - 1 : 0);
  std::iota(order.begin(), order.end(), 1);
  do {
    std::vector<int> s(k);
    int cur = 0;
    for (int v : order) {
      s[cur] = v;
      cur = v;
    }
    s[cur] = 0;
    kcycles.push_back(s);
  } while (std::next_permutation(order.begin(), order.end()));

  SplitTable table(low.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t sig = 0; sig < low.size(); ++sig) {
    WreathElement y = representative(*base, low.type(sig));
    WreathElement x;
    x.g.assign(k, 0);
    for (const auto& s : kcycles) {
      x.s = s;
      std::fill(x.g.begin(), x.g.end(), 0);
      while (true) {
        int c = cycle_product_class(*base, x, 0);
        int tau = lm.index_of(type_of(*base, embed_pair(inverse(G, x), y)));
        table[sig][{c, tau}] += 1;
        int pos = k - 1;
        while (pos >= 0 && ++x.g[pos] == bo) x.g[pos--] = 0;
        if (pos < 0) break;
      }
    }
  }
  return table;
}

Mat zero_block(const GroupHandle& base, int target, int source) {
  return Mat(make_level(base, target)->size(), make_level(base, source)->size());
}

}  // namespace

WreathClassFunction induce(const WreathClassFunction& f, const WreathClassFunction& g, std::size_t budget) {
  const auto& base = f.level()->base();
  if (base.get() != g.level()->base().get()) throw GroupMismatch("induction over different base groups");
  auto lN = make_level(base, f.n() + g.n());
  auto table = induction_splits(base, *f.level(), *g.level(), *lN, budget);
  auto out = WreathClassFunction::zero(lN);
  for (std::size_t tau = 0; tau < lN->size(); ++tau) {
    CycNum s(0);
    for (const auto& [pr, cnt] : table[tau]) {
      if (f[pr.first].is_zero() || g[pr.second].is_zero()) continue;
      s += CycNum(cnt) * f[pr.first] * g[pr.second];
    }
    out[tau] = s;
  }
  return out;
}

WreathClassFunction induce_frobenius(const WreathClassFunction& f, const WreathClassFunction& g, std::size_t budget) {
  const auto& base = f.level()->base();
  if (base.get() != g.level()->base().get()) throw GroupMismatch("induction over different base groups");
  const int n = f.n(), m = g.n(), N = n + m;
  auto lN = make_level(base, N);
  if (lN->order() > Integer(static_cast<unsigned long>(budget))) throw BudgetExceeded("Frobenius induction: group too large");
  const auto& G = base->group();
  const std::uint64_t order = lN->order().get_ui();
  CycNum h_order = CycNum(exact::Rational(f.level()->order() * g.level()->order()));
  auto out = WreathClassFunction::zero(lN);
  for (std::size_t tau = 0; tau < lN->size(); ++tau) {
    WreathElement x = representative(*base, lN->type(tau));
    CycNum s(0);
    for (std::uint64_t idx = 0; idx < order; ++idx) {
      WreathElement y = element_at(G.order(), N, idx);
      WreathElement c = multiply(G, multiply(G, inverse(G, y), x), y);
      bool stable = true;
      for (int i = 0; i < n && stable; ++i) stable = c.s[i] < n;
      if (!stable) continue;
      s += f.at(type_of(*base, block(c, 0, n))) * g.at(type_of(*base, block(c, n, m)));
    }
    out[tau] = s / h_order;
  }
  return out;
}

WreathClassFunction restrict_pair(const WreathClassFunction& f, int k, const groups::ClassFunction& gamma,
                                  std::size_t budget) {
  const auto& base = f.level()->base();
  groups::require_same_group(base, gamma.group());
  if (k < 1 || k > f.n()) throw IndexOutOfRange("restriction needs 1 <= k <= level");
  auto low = make_level(base, f.n() - k);
  auto table = restriction_splits(base, k, *f.level(), *low, budget);
  CycNum scale = CycNum(exact::Rational(Integer(k), make_level(base, k)->order()));
  auto out = WreathClassFunction::zero(low);
  for (std::size_t sig = 0; sig < low->size(); ++sig) {
    CycNum s(0);
    for (const auto& [pr, cnt] : table[sig]) {
      if (gamma[pr.first].is_zero() || f[pr.second].is_zero()) continue;
      s += CycNum(cnt) * gamma[pr.first] * f[pr.second];
    }
    out[sig] = scale * s;
  }
  return out;
}

Mat gram_matrix(const WreathLevel& level) {
  Mat g(level.size(), level.size());
  for (std::size_t i = 0; i < level.size(); ++i)
    g(i, level.inverse_index(i)) = CycNum(exact::Rational(1) / exact::Rational(level.centralizer(i)));
  return g;
}

LevelOperator LevelOperator::identity(const GroupHandle& base, int max_level) {
  LevelOperator op(base, 0);
  for (int a = 0; a <= max_level; ++a) op.set_block(a, Mat::identity(make_level(base, a)->size()));
  return op;
}

const Mat& LevelOperator::block(int level) const {
  auto it = blocks_.find(level);
  if (it == blocks_.end()) throw IndexOutOfRange("operator is not defined on level " + std::to_string(level));
  return it->second;
}

WreathClassFunction LevelOperator::apply(const WreathClassFunction& f) const {
  if (f.level()->base().get() != base_.get()) throw GroupMismatch("operator and class function differ in base");
  const Mat& m = block(f.n());
  auto target = make_level(base_, f.n() + shift_);
  std::vector<CycNum> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !f[j].is_zero()) v[i] += m(i, j) * f[j];
    }
  }
  return WreathClassFunction(target, std::move(v));
}

LevelOperator LevelOperator::compose(const LevelOperator& other) const {
  if (base_.get() != other.base_.get()) throw GroupMismatch("operators over different base groups");
  LevelOperator out(base_, shift_ + other.shift_);
  for (const auto& [a, mb] : other.blocks_) {
    int mid = a + other.shift_;
    if (a + out.shift_ < 0) continue;
    auto it = blocks_.find(mid);
    if (it == blocks_.end()) continue;
    out.blocks_[a] = it->second * mb;
  }
  // Source levels where `other` lands below level 0 compose to zero.
  for (int a = 0; a < -other.shift_; ++a) {
    if (a + out.shift_ >= 0) out.blocks_[a] = zero_block(base_, a + out.shift_, a);
  }
  return out;
}

LevelOperator LevelOperator::restricted(int max_source) const {
  LevelOperator out(base_, shift_);
  for (const auto& [a, m] : blocks_)
    if (a <= max_source) out.blocks_[a] = m;
  return out;
}

namespace {

LevelOperator combine(const LevelOperator& a, const LevelOperator& b, bool subtract) {
  if (a.shift() != b.shift()) throw InvalidInput("adding operators of different shifts");
  LevelOperator out(a.base(), a.shift());
  for (const auto& [lv, m] : a.blocks()) {
    if (!b.has_block(lv)) continue;
    out.set_block(lv, subtract ? m - b.block(lv) : m + b.block(lv));
  }
  return out;
}

}  // namespace

LevelOperator operator+(const LevelOperator& a, const LevelOperator& b) { return combine(a, b, false); }
LevelOperator operator-(const LevelOperator& a, const LevelOperator& b) { return combine(a, b, true); }

LevelOperator operator*(const CycNum& s, const LevelOperator& a) {
  LevelOperator out(a.base(), a.shift());
  for (const auto& [lv, m] : a.blocks()) out.set_block(lv, s * m);
  return out;
}

bool LevelOperator::is_zero() const {
  for (const auto& [lv, m] : blocks_)
    if (!m.is_zero()) return false;
  return true;
}

LevelOperator commutator(const LevelOperator& a, const LevelOperator& b) {
  return a.compose(b) - b.compose(a);
}

LevelOperator heisenberg_p(const GroupHandle& base, int k, const groups::ClassFunction& gamma, int max_level,
                           std::size_t budget) {
  if (k == 0) throw InvalidInput("mode 0 is not a Heisenberg generator");
  groups::require_same_group(base, gamma.group());
  LevelOperator op(base, k);
  if (k > 0) {
    auto lk = make_level(base, k);
    auto sigma = sigma_n(lk, gamma);
    for (int a = 0; a <= max_level; ++a) {
      auto la = make_level(base, a);
      auto lN = make_level(base, a + k);
      auto table = induction_splits(base, *lk, *la, *lN, budget);
      Mat m(lN->size(), la->size());
      for (std::size_t tau = 0; tau < lN->size(); ++tau) {
        for (const auto& [pr, cnt] : table[tau]) {
          if (!sigma[pr.first].is_zero()) m(tau, pr.second) += CycNum(cnt) * sigma[pr.first];
        }
      }
      op.set_block(a, std::move(m));
    }
    return op;
  }
  const int kk = -k;
  CycNum scale = CycNum(exact::Rational(Integer(kk), make_level(base, kk)->order()));
  for (int a = kk; a <= max_level; ++a) {
    auto la = make_level(base, a);
    auto low = make_level(base, a - kk);
    auto table = restriction_splits(base, kk, *la, *low, budget);
    Mat m(low->size(), la->size());
    for (std::size_t sig = 0; sig < low->size(); ++sig) {
      for (const auto& [pr, cnt] : table[sig]) {
        if (!gamma[pr.first].is_zero()) m(sig, pr.second) += scale * CycNum(cnt) * gamma[pr.first];
      }
    }
    op.set_block(a, std::move(m));
  }
  return op;
}

LevelOperator heisenberg_adjoint(const GroupHandle& base, int k, const groups::ClassFunction& gamma, int max_level,
                                 std::size_t budget) {
  if (k <= 0) throw InvalidInput("adjoint path takes the positive mode");
  auto p = heisenberg_p(base, k, gamma, std::max(max_level - k, 0), budget);
  LevelOperator op(base, -k);
  for (int b = k; b <= max_level; ++b) {
    int a = b - k;
    Mat ga_inv = exact::inverse(gram_matrix(*make_level(base, a)));
    op.set_block(b, ga_inv * p.block(a).transpose() * gram_matrix(*make_level(base, b)));
  }
  return op;
}

}  // namespace wfk::wreath
