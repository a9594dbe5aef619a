#include "wfk/groups/class_function.hpp"

#include "wfk/errors.hpp"

namespace wfk::groups {

ClassFunction::ClassFunction(GroupHandle g, std::vector<CycNum> values)
    : g_(std::move(g)), v_(std::move(values)) {
  if (!g_) throw InvalidInput("class function without a group");
  if (v_.size() != g_->num_classes()) throw InvalidInput("class function has the wrong length");
}

ClassFunction ClassFunction::zero(GroupHandle g) {
  std::size_t k = g->num_classes();
  return ClassFunction(std::move(g), std::vector<CycNum>(k));
}

ClassFunction ClassFunction::indicator(GroupHandle g, int c) {
  if (c < 0 || static_cast<std::size_t>(c) >= g->num_classes()) throw IndexOutOfRange("class index");
  auto f = zero(std::move(g));
  f.v_[c] = 1;
  return f;
}

ClassFunction ClassFunction::trivial(GroupHandle g) {
  std::size_t k = g->num_classes();
  return ClassFunction(std::move(g), std::vector<CycNum>(k, CycNum(1)));
}

ClassFunction ClassFunction::regular(GroupHandle g) {
  auto f = zero(g);
  f.v_[0] = static_cast<long>(g->order());
  return f;
}

ClassFunction ClassFunction::irreducible(GroupHandle g, int i) {
  const auto& t = g->characters();
  if (i < 0 || static_cast<std::size_t>(i) >= t.size()) throw IndexOutOfRange("irreducible index");
  return ClassFunction(g, t.irreducibles[i]);
}

ClassFunction ClassFunction::matrix_trace(GroupHandle g) {
  const auto& m = g->group().matrices();
  if (!m) throw MissingMatrixModel("group " + g->name() + " has no matrix model");
  std::vector<CycNum> v;
  for (auto rep : g->classes().class_reps) v.push_back((*m)[rep].trace());
  return ClassFunction(std::move(g), std::move(v));
}

void require_same_group(const GroupHandle& a, const GroupHandle& b) {
  if (a.get() != b.get()) throw GroupMismatch("class functions live on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same_group(g_, o.g_);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same_group(g_, o.g_);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

ClassFunction operator*(const CycNum& s, ClassFunction a) {
  for (auto& x : a.v_) x = s * x;
  return a;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.g_.get() == b.g_.get() && a.v_ == b.v_;
}

ClassFunction ClassFunction::pointwise(const ClassFunction& o) const {
  require_same_group(g_, o.g_);
  ClassFunction r = *this;
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] *= o.v_[i];
  return r;
}

ClassFunction ClassFunction::dual() const {
  ClassFunction r = *this;
  const auto& inv = g_->classes().inverse_class;
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = v_[inv[i]];
  return r;
}

CycNum inner_product(const ClassFunction& f, const ClassFunction& g) {
  require_same_group(f.group(), g.group());
  const auto& cd = f.group()->classes();
  CycNum s(0);
  for (std::size_t c = 0; c < f.size(); ++c) {
    const CycNum& b = g[cd.inverse_class[c]];
    if (f[c].is_zero() || b.is_zero()) continue;
    s += CycNum(static_cast<long>(cd.class_sizes[c])) * f[c] * b;
  }
  return s / CycNum(static_cast<long>(f.group()->order()));
}

// The indicator of C_c corresponds to the class sum K_c, so coordinates carry over unchanged.
CenterElement to_center(const ClassFunction& f) { return {f.group(), f.values()}; }

ClassFunction from_center(const CenterElement& z) { return ClassFunction(z.group, z.coords); }

CenterElement center_multiply(const CenterElement& a, const CenterElement& b) {
  require_same_group(a.group, b.group);
  const std::size_t k = a.group->num_classes();
  const auto& n = a.group->structure_constants();
  std::vector<CycNum> out(k);
  for (std::size_t x = 0; x < k; ++x) {
    if (a.coords[x].is_zero()) continue;
    for (std::size_t y = 0; y < k; ++y) {
      if (b.coords[y].is_zero()) continue;
      CycNum ab = a.coords[x] * b.coords[y];
      for (std::size_t c = 0; c < k; ++c) {
        auto m = n[(x * k + y) * k + c];
        if (m != 0) out[c] += CycNum(static_cast<long>(m)) * ab;
      }
    }
  }
  return {a.group, std::move(out)};
}

ClassFunction convolution(const ClassFunction& f, const ClassFunction& g) {
  return from_center(center_multiply(to_center(f), to_center(g)));
}

}  // namespace wfk::groups
