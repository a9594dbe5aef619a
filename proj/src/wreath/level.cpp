#include "wfk/wreath/level.hpp"

#include "wfk/errors.hpp"

namespace wfk::wreath {

WreathLevel::WreathLevel(GroupHandle base, int n) : base_(std::move(base)), n_(n) {
  types_ = enumerate_types(static_cast<int>(base_->num_classes()), n);
  for (std::size_t i = 0; i < types_.size(); ++i) {
    index_.emplace(types_[i], static_cast<int>(i));
    z_.push_back(centralizer_order(*base_, types_[i]));
  }
  for (const auto& t : types_) inverse_.push_back(index_.at(inverse_type(*base_, t)));
  Integer b = static_cast<long>(base_->order());
  mpz_pow_ui(order_.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n));
  order_ *= exact::factorial(n);
}

int WreathLevel::index_of(const TypeFunction& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw IndexOutOfRange("type " + t.to_string() + " is not a type of this level");
  return it->second;
}

LevelHandle make_level(GroupHandle base, int n) {
  if (n < 0) throw IndexOutOfRange("negative wreath level");
  return std::make_shared<const WreathLevel>(std::move(base), n);
}

void require_same_level(const WreathLevel& a, const WreathLevel& b) {
  if (a.base().get() != b.base().get()) throw GroupMismatch("class functions over different base groups");
  if (a.n() != b.n()) throw GroupMismatch("class functions on different levels");
}

WreathClassFunction::WreathClassFunction(LevelHandle level, std::vector<CycNum> values)
    : level_(std::move(level)), v_(std::move(values)) {
  if (v_.size() != level_->size()) throw InvalidInput("wreath class function has the wrong length");
}

WreathClassFunction WreathClassFunction::zero(LevelHandle level) {
  std::size_t n = level->size();
  return WreathClassFunction(std::move(level), std::vector<CycNum>(n));
}

WreathClassFunction WreathClassFunction::indicator(LevelHandle level, std::size_t i) {
  auto f = zero(std::move(level));
  if (i >= f.v_.size()) throw IndexOutOfRange("type index");
  f.v_[i] = 1;
  return f;
}

WreathClassFunction WreathClassFunction::vacuum(GroupHandle base) {
  return WreathClassFunction(make_level(std::move(base), 0), {CycNum(1)});
}

WreathClassFunction& WreathClassFunction::operator+=(const WreathClassFunction& o) {
  require_same_level(*level_, *o.level_);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

WreathClassFunction& WreathClassFunction::operator-=(const WreathClassFunction& o) {
  require_same_level(*level_, *o.level_);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

WreathClassFunction operator*(const CycNum& s, WreathClassFunction a) {
  for (auto& x : a.v_) x = s * x;
  return a;
}

bool operator==(const WreathClassFunction& a, const WreathClassFunction& b) {
  return a.level_->base().get() == b.level_->base().get() && a.n() == b.n() && a.v_ == b.v_;
}

WreathClassFunction WreathClassFunction::pointwise(const WreathClassFunction& o) const {
  require_same_level(*level_, *o.level_);
  auto r = *this;
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] *= o.v_[i];
  return r;
}

bool WreathClassFunction::is_zero() const {
  for (const auto& x : v_)
    if (!x.is_zero()) return false;
  return true;
}

CycNum inner_product(const WreathClassFunction& f, const WreathClassFunction& g) {
  require_same_level(*f.level(), *g.level());
  const auto& lv = *f.level();
  CycNum s(0);
  for (std::size_t i = 0; i < lv.size(); ++i) {
    const CycNum& b = g[lv.inverse_index(i)];
    if (f[i].is_zero() || b.is_zero()) continue;
    s += f[i] * b * CycNum(exact::Rational(1) / exact::Rational(lv.centralizer(i)));
  }
  return s;
}

WreathClassFunction sigma_n(const LevelHandle& level, const groups::ClassFunction& gamma) {
  groups::require_same_group(level->base(), gamma.group());
  auto f = WreathClassFunction::zero(level);
  const int n = level->n();
  if (n == 0) return f;
  const int k = static_cast<int>(level->base()->num_classes());
  for (int c = 0; c < k; ++c) f[level->index_of(cycle_type(k, c, n))] = CycNum(n) * gamma[c];
  return f;
}

WreathClassFunction eta_eps(const LevelHandle& level, const groups::ClassFunction& gamma, bool signed_) {
  groups::require_same_group(level->base(), gamma.group());
  auto f = WreathClassFunction::zero(level);
  for (std::size_t i = 0; i < level->size(); ++i) {
    const auto& t = level->type(i);
    CycNum v(1);
    int sign = 1;
    for (std::size_t c = 0; c < t.by_class.size(); ++c) {
      for (int r : t.by_class[c].parts) {
        v *= gamma[c];
        if (r % 2 == 0) sign = -sign;
      }
    }
    f[i] = signed_ ? CycNum(sign) * v : v;
  }
  return f;
}

CycNum weighted_form(const WreathClassFunction& f, const WreathClassFunction& g, const groups::ClassFunction& xi) {
  require_same_level(*f.level(), *g.level());
  return inner_product(eta_eps(f.level(), xi, false).pointwise(f), g);
}

}  // namespace wfk::wreath
