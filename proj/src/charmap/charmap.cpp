#include "wfk/charmap/charmap.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "wfk/errors.hpp"
#include "wfk/fock/operators.hpp"
#include "wfk/groups/builtins.hpp"

namespace wfk::charmap {

using exact::Rational;
using wreath::TypeFunction;

fock::SpaceHandle colored_space(const GroupHandle& base) {
  static std::mutex mu;
  static std::map<const groups::ClassedGroup*, std::pair<GroupHandle, fock::SpaceHandle>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(base.get());
  if (it != cache.end()) return it->second.second;
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < base->num_classes(); ++c) labels.push_back("c" + std::to_string(c));
  auto s = fock::make_space(labels, std::vector<bool>(labels.size(), false));
  cache.emplace(base.get(), std::make_pair(base, s));
  return s;
}

fock::Monomial monomial_of_type(const TypeFunction& t) {
  fock::Monomial m;
  for (std::size_t c = 0; c < t.by_class.size(); ++c)
    for (int r : t.by_class[c].parts) m.push_back(fock::Generator{r, static_cast<int>(c)});
  std::sort(m.begin(), m.end());
  return m;
}

TypeFunction type_of_monomial(const fock::Monomial& m, std::size_t num_classes) {
  TypeFunction t;
  t.by_class.resize(num_classes);
  for (const auto& g : m) t.by_class.at(g.color).parts.push_back(g.mode);
  for (auto& p : t.by_class) std::sort(p.parts.rbegin(), p.parts.rend());
  return t;
}

FockVector ch(const WreathClassFunction& f) {
  const auto& lv = *f.level();
  FockVector v(colored_space(lv.base()));
  for (std::size_t i = 0; i < lv.size(); ++i) {
    if (f[i].is_zero()) continue;
    v.add(monomial_of_type(lv.type(i)), f[i] / CycNum(Rational(lv.centralizer(i))));
  }
  return v;
}

WreathClassFunction ch_inverse(const GroupHandle& base, const FockVector& v, int n) {
  auto lv = wreath::make_level(base, n);
  auto f = WreathClassFunction::zero(lv);
  for (const auto& [m, c] : v.terms()) {
    if (fock::weight(m) != n) continue;
    int i = lv->index_of(type_of_monomial(m, base->num_classes()));
    f[i] = c * CycNum(Rational(lv->centralizer(i)));
  }
  return f;
}

CycNum colored_pairing(const GroupHandle& base, const FockVector& v, const FockVector& w) {
  CycNum s(0);
  for (const auto& [m, c] : v.terms()) {
    auto t = type_of_monomial(m, base->num_classes());
    CycNum other = w.coefficient(monomial_of_type(wreath::inverse_type(*base, t)));
    if (other.is_zero()) continue;
    s += c * other * CycNum(Rational(wreath::centralizer_order(*base, t)));
  }
  return s;
}

fock::Field p_field(const GroupHandle& base, const ClassFunction& gamma) {
  groups::require_same_group(base, gamma.group());
  const auto& cls = base->classes();
  fock::Field f;
  for (std::size_t c = 0; c < base->num_classes(); ++c) {
    f.create.push_back(gamma[c] / CycNum(static_cast<long>(cls.centralizer_orders[c])));
    f.annihilate.push_back(gamma[cls.inverse_class[c]]);
  }
  return f;
}

FockOperator p_mode(const GroupHandle& base, int k, const ClassFunction& gamma) {
  auto s = colored_space(base);
  if (k == 0) return FockOperator(s, 0);
  return FockOperator::single(s, p_field(base, gamma).mode(k));
}

std::vector<FockVector> exp_series(const GroupHandle& base, const ClassFunction& gamma, bool signed_, int cutoff) {
  auto s = colored_space(base);
  std::vector<FockVector> e{FockVector::vacuum(s)};
  for (int n = 1; n <= cutoff; ++n) {
    FockVector acc(s);
    for (int k = 1; k <= n; ++k) {
      auto v = p_mode(base, k, gamma).apply(e[n - k]);
      acc += (signed_ && k % 2 == 0) ? CycNum(-1) * v : v;
    }
    e.push_back(CycNum(Rational(1, n)) * acc);
  }
  return e;
}

Report verify_heisenberg_transport(const GroupHandle& base, int cutoff, std::size_t budget) {
  Report r;
  r.suite = "heisenberg-transport";
  const auto& table = base->characters();
  for (int k = -cutoff; k <= cutoff; ++k) {
    if (k == 0) continue;
    for (std::size_t gi = 0; gi < table.irreducibles.size(); ++gi) {
      auto gamma = ClassFunction::irreducible(base, static_cast<int>(gi));
      int max_level = k > 0 ? cutoff - k : cutoff;
      auto group_op = wreath::heisenberg_p(base, k, gamma, max_level, budget);
      auto fock_op = p_mode(base, k, gamma);
      for (const auto& [a, block] : group_op.blocks()) {
        auto lv = wreath::make_level(base, a);
        for (std::size_t j = 0; j < lv->size(); ++j) {
          auto f = WreathClassFunction::indicator(lv, j);
          auto lhs = ch(group_op.apply(f));
          auto rhs = fock_op.apply(ch(f));
          r.add("k=" + std::to_string(k) + " gamma=" + std::to_string(gi) + " class=" + lv->type(j).to_string(),
                lhs.to_string(), rhs.to_string(), lhs == rhs);
        }
      }
    }
  }
  return r;
}

std::optional<TypeFunction> k_class_type(const GroupHandle& base, int i, int c, int n) {
  if (i < 0) throw InvalidInput("K_i needs i >= 0");
  if (c < 0 || c >= static_cast<int>(base->num_classes())) throw IndexOutOfRange("class index out of range");
  if (n < i + 1) return std::nullopt;
  TypeFunction t;
  t.by_class.resize(base->num_classes());
  t.by_class[c].parts.push_back(i + 1);
  for (int r = 0; r < n - i - 1; ++r) t.by_class[0].parts.push_back(1);
  for (auto& p : t.by_class) std::sort(p.parts.rbegin(), p.parts.rend());
  return t;
}

WreathClassFunction delta_i(const wreath::WreathGroup& w, int i, int c, const WreathClassFunction& f) {
  wreath::require_same_level(*w.level, *f.level());
  auto t = k_class_type(w.level->base(), i, c, w.level->n());
  if (!t) return WreathClassFunction::zero(w.level);
  auto k = WreathClassFunction::indicator(w.level, w.level->index_of(*t));
  return w.from_table(groups::convolution(w.to_table(f), w.to_table(k)));
}

LevelOperator delta_operator(const GroupHandle& base, int i, const ClassFunction& a, int max_level,
                             std::size_t budget) {
  groups::require_same_group(base, a.group());
  LevelOperator op(base, 0);
  for (int n = 0; n <= max_level; ++n) {
    auto lv = wreath::make_level(base, n);
    wreath::Mat m(lv->size(), lv->size());
    if (n >= i + 1) {
      auto w = wreath::build_wreath(base, n, budget);
      for (std::size_t j = 0; j < lv->size(); ++j) {
        auto f = WreathClassFunction::indicator(w.level, j);
        auto col = WreathClassFunction::zero(w.level);
        for (std::size_t c = 0; c < base->num_classes(); ++c)
          if (!a[c].is_zero()) col += a[c] * delta_i(w, i, static_cast<int>(c), f);
        for (std::size_t r = 0; r < lv->size(); ++r) m(r, j) = col[r];
      }
    }
    op.set_block(n, std::move(m));
  }
  return op;
}

namespace {

fock::ModeOp create1(int n) { return fock::ModeOp{fock::ModeOp::creation, n, false, {CycNum(1)}}; }
fock::ModeOp derive1(int n) { return fock::ModeOp{fock::ModeOp::annihilation, n, false, {CycNum(n)}}; }

fock::SpaceHandle single_color_space() { return colored_space(groups::builtin_group("trivial")); }

}  // namespace

FockOperator cubic_formula(int cutoff) {
  FockOperator op(single_color_space(), 0, cutoff);
  const CycNum half(Rational(1, 2));
  for (int n = 1; n < cutoff; ++n) {
    for (int m = 1; n + m <= cutoff; ++m) {
      op.add_term(fock::Term{half, {create1(n), create1(m), derive1(n + m)}});
      op.add_term(fock::Term{half, {create1(n + m), derive1(n), derive1(m)}});
    }
  }
  return op;
}

FockOperator cubic_from_normal_order(int cutoff) {
  auto s = single_color_space();
  fock::Field a{false, {CycNum(1)}, {CycNum(1)}};
  return CycNum(Rational(1, 6)) * fock::normal_ordered_product(s, {a, a, a}, 0, cutoff);
}

CycNum fw_prefactor(const GroupHandle& base, int n, int gamma_index, int c) {
  const auto& table = base->characters();
  const auto& cls = base->classes();
  CycNum gamma_cinv = table.irreducibles.at(gamma_index)[cls.inverse_class.at(c)];
  long order = static_cast<long>(base->order());
  long d = static_cast<long>(table.degrees.at(gamma_index));
  return CycNum(static_cast<long>(n) * order * order) * gamma_cinv /
         CycNum(static_cast<long>(cls.centralizer_orders[c]) * d * d);
}

LevelOperator fw_L(const GroupHandle& base, int n, int gamma_index, int c, int max_level, std::size_t budget) {
  auto gamma = ClassFunction::irreducible(base, gamma_index);
  if (n == 0) {
    LevelOperator acc;
    for (int k = 1; k <= max_level; ++k) {
      auto up = wreath::heisenberg_p(base, k, gamma, max_level, budget);
      auto down = wreath::heisenberg_p(base, -k, gamma, max_level, budget);
      auto term = up.compose(down);
      acc = k == 1 ? term : acc + term;
    }
    if (max_level == 0) return CycNum(0) * LevelOperator::identity(base, 0);
    return CycNum(-1) * acc;
  }
  CycNum pref = fw_prefactor(base, n, gamma_index, c);
  if (pref.is_zero()) throw ZeroPrefactor("bracket prefactor vanishes for this (n, gamma, c)");
  auto delta = delta_operator(base, 1, ClassFunction::indicator(base, c), max_level, budget);
  auto p = wreath::heisenberg_p(base, n, gamma, max_level, budget);
  return (CycNum(kDeltaBracketSign) * pref).inverse() * wreath::commutator(delta, p);
}

Report fw_virasoro_check(const GroupHandle& base, int c, int n_modes, int m_levels, std::size_t budget) {
  Report r;
  r.suite = "fw-virasoro";
  const int k = static_cast<int>(base->num_classes());
  std::map<std::pair<int, int>, LevelOperator> L;
  auto get = [&](int n, int g) -> const LevelOperator* {
    auto key = std::make_pair(n, g);
    auto it = L.find(key);
    if (it != L.end()) return &it->second;
    try {
      return &L.emplace(key, fw_L(base, n, g, c, m_levels, budget)).first->second;
    } catch (const ZeroPrefactor&) {
      return nullptr;
    }
  };
  auto id = LevelOperator::identity(base, m_levels);
  for (int n = -n_modes; n <= n_modes; ++n) {
    for (int m = -n_modes; m <= n_modes; ++m) {
      for (int g = 0; g < k; ++g) {
        for (int h = 0; h < k; ++h) {
          std::string name = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " gamma=" + std::to_string(g) +
                             " gamma'=" + std::to_string(h);
          const LevelOperator* ln = get(n, g);
          const LevelOperator* lm = get(m, h);
          const LevelOperator* lnm = (g == h && n != m) ? get(n + m, g) : nullptr;
          if (!ln || !lm || (g == h && n != m && !lnm)) {
            r.skipped.push_back(name + ": zero prefactor");
            continue;
          }
          auto lhs = wreath::commutator(*ln, *lm);
          for (const auto& [a, block] : lhs.blocks()) {
            wreath::Mat expected(block.rows(), block.cols());
            bool defined = true;
            if (g == h) {
              if (n != m) {
                if (!lnm->has_block(a)) {
                  defined = false;
                } else {
                  expected = CycNum(n - m) * lnm->block(a);
                }
              }
              if (n == -m && n != 0) expected = expected - CycNum(Rational(n * n * n - n, 12)) * id.block(a);
            }
            std::string probe = name + " level=" + std::to_string(a);
            if (!defined) {
              r.add(probe, exact::to_string(block), "undefined", false);
              continue;
            }
            r.add(probe, exact::to_string(block), exact::to_string(expected), block == expected);
          }
        }
      }
    }
  }
  return r;
}

int filtration_degree(const TypeFunction& t) {
  int len = 0;
  for (const auto& p : t.by_class) len += static_cast<int>(p.parts.size());
  return t.total() - len;
}

WreathClassFunction filtered_convolution(const wreath::WreathGroup& sn, const WreathClassFunction& f,
                                         const WreathClassFunction& g) {
  if (sn.level->base()->num_classes() != 1)
    throw InvalidInput("filtered convolution is defined for symmetric groups only");
  wreath::require_same_level(*sn.level, *f.level());
  wreath::require_same_level(*sn.level, *g.level());
  const auto& lv = *sn.level;
  auto out = WreathClassFunction::zero(sn.level);
  for (std::size_t a = 0; a < lv.size(); ++a) {
    if (f[a].is_zero()) continue;
    for (std::size_t b = 0; b < lv.size(); ++b) {
      if (g[b].is_zero()) continue;
      int top = filtration_degree(lv.type(a)) + filtration_degree(lv.type(b));
      for (std::size_t t = 0; t < lv.size(); ++t) {
        if (filtration_degree(lv.type(t)) != top) continue;
        auto n = sn.group->structure_constant(sn.type_to_class[a], sn.type_to_class[b], sn.type_to_class[t]);
        if (n != 0) out[t] += f[a] * g[b] * CycNum(static_cast<long>(n));
      }
    }
  }
  return out;
}

Report lehn_sorger_check(int n, std::size_t budget) {
  Report r;
  r.suite = "lehn-sorger";
  auto triv = groups::builtin_group("trivial");
  auto sn = wreath::build_wreath(triv, n, budget);
  auto transposition = WreathClassFunction::zero(sn.level);
  if (auto t = k_class_type(triv, 1, 0, n)) transposition = WreathClassFunction::indicator(sn.level, sn.level->index_of(*t));
  fock::FockModel affine(fock::builtin_model("affine-plane"));
  auto d = fock::boundary_operator(affine, n);
  for (std::size_t j = 0; j < sn.level->size(); ++j) {
    auto f = WreathClassFunction::indicator(sn.level, j);
    auto lhs = ch(filtered_convolution(sn, transposition, f));
    auto rhs = CycNum(kLehnSorgerSign) * d.apply(ch(f));
    r.add("n=" + std::to_string(n) + " class=" + sn.level->type(j).to_string(), lhs.to_string(), rhs.to_string(),
          lhs == rhs);
  }
  return r;
}

Report filtered_product_check(int n, std::size_t budget) {
  Report r;
  r.suite = "filtered-product";
  auto sn = wreath::build_wreath(groups::builtin_group("trivial"), n, budget);
  const auto& lv = sn.level;
  auto name = [&](std::size_t i) { return lv->type(i).to_string(); };
  for (std::size_t a = 0; a < lv->size(); ++a) {
    auto fa = WreathClassFunction::indicator(lv, a);
    for (std::size_t b = 0; b < lv->size(); ++b) {
      auto fb = WreathClassFunction::indicator(lv, b);
      auto ab = filtered_convolution(sn, fa, fb);
      auto ba = filtered_convolution(sn, fb, fa);
      r.add("commute " + name(a) + " " + name(b), ch(ab).to_string(), ch(ba).to_string(), ab == ba);
      bool graded = true;
      for (std::size_t j = 0; j < lv->size(); ++j)
        if (!ab[j].is_zero() && filtration_degree(lv->type(j)) != filtration_degree(lv->type(a)) + filtration_degree(lv->type(b)))
          graded = false;
      r.add("degree " + name(a) + " " + name(b), graded ? "additive" : "not additive", "additive", graded);
      for (std::size_t c = 0; c < lv->size(); ++c) {
        auto fc = WreathClassFunction::indicator(lv, c);
        auto left = filtered_convolution(sn, ab, fc);
        auto right = filtered_convolution(sn, fa, filtered_convolution(sn, fb, fc));
        r.add("associate " + name(a) + " " + name(b) + " " + name(c), ch(left).to_string(), ch(right).to_string(),
              left == right);
      }
    }
  }
  return r;
}

Report conv_cubic_check(int n, std::size_t budget) {
  Report r;
  r.suite = "conv-cubic";
  auto triv = groups::builtin_group("trivial");
  auto explicit_form = cubic_formula(n);
  auto normal_form = cubic_from_normal_order(n);
  for (int level = 0; level <= n; ++level) {
    auto sn = wreath::build_wreath(triv, level, budget);
    for (std::size_t j = 0; j < sn.level->size(); ++j) {
      auto f = WreathClassFunction::indicator(sn.level, j);
      auto lhs = ch(delta_i(sn, 1, 0, f));
      auto rhs = explicit_form.apply(ch(f));
      auto rhs2 = normal_form.apply(ch(f));
      std::string name = "n=" + std::to_string(level) + " class=" + sn.level->type(j).to_string();
      r.add(name + " explicit", lhs.to_string(), rhs.to_string(), lhs == rhs);
      r.add(name + " normal-ordered", lhs.to_string(), rhs2.to_string(), lhs == rhs2);
    }
  }
  return r;
}

Report exp_formula_check(const GroupHandle& base, int n_max, std::size_t budget) {
  (void)budget;
  Report r;
  r.suite = "exp-formula";
  const auto& table = base->characters();
  for (std::size_t gi = 0; gi < table.irreducibles.size(); ++gi) {
    auto gamma = ClassFunction::irreducible(base, static_cast<int>(gi));
    for (bool signed_ : {false, true}) {
      auto series = exp_series(base, gamma, signed_, n_max);
      for (int n = 0; n <= n_max; ++n) {
        auto lhs = ch(wreath::eta_eps(wreath::make_level(base, n), gamma, signed_));
        r.add(std::string(signed_ ? "epsilon" : "eta") + " gamma=" + std::to_string(gi) + " n=" + std::to_string(n),
              lhs.to_string(), series[n].to_string(), lhs == series[n]);
      }
    }
  }
  return r;
}

}  // namespace wfk::charmap
