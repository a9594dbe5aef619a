#include "wfk/fock/fock.hpp"

#include <algorithm>

#include "wfk/errors.hpp"

namespace wfk::fock {

SpaceHandle make_space(std::vector<std::string> labels, std::vector<bool> odd) {
  if (labels.size() != odd.size()) throw InvalidInput("colour labels and parities differ in length");
  return std::make_shared<const FockSpace>(FockSpace{std::move(labels), std::move(odd)});
}

int weight(const Monomial& m) {
  int w = 0;
  for (const auto& g : m) w += g.mode;
  return w;
}

FockVector FockVector::vacuum(SpaceHandle s) { return monomial(std::move(s), {}); }

FockVector FockVector::monomial(SpaceHandle s, const Monomial& m, const CycNum& coef) {
  FockVector v(std::move(s));
  Monomial sorted;
  int sign = 1;
  for (auto it = m.rbegin(); it != m.rend() && sign != 0; ++it) {
    Monomial next;
    sign *= insert_generator(v.space_, sorted, *it, next);
    sorted = std::move(next);
  }
  if (sign != 0) v.add(sorted, CycNum(sign) * coef);
  return v;
}

CycNum FockVector::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycNum(0) : it->second;
}

int FockVector::max_weight() const {
  int w = -1;
  for (const auto& [m, c] : terms_) w = std::max(w, weight(m));
  return w;
}

FockVector FockVector::weight_part(int w) const {
  FockVector out(space_);
  for (const auto& [m, c] : terms_)
    if (weight(m) == w) out.terms_.emplace(m, c);
  return out;
}

void FockVector::add(const Monomial& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (!space_) space_ = o.space_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (!space_) space_ = o.space_;
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

FockVector operator*(const CycNum& s, const FockVector& v) {
  FockVector out(v.space_);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : v.terms_) out.terms_.emplace(m, s * c);
  return out;
}

FockVector operator*(const FockVector& a, const FockVector& b) {
  FockVector out(a.space_);
  Monomial next;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial cur = mb;
      int sign = 1;
      for (auto it = ma.rbegin(); it != ma.rend() && sign != 0; ++it) {
        sign *= insert_generator(a.space_, cur, *it, next);
        cur.swap(next);
      }
      if (sign != 0) out.add(cur, CycNum(sign) * ca * cb);
    }
  }
  return out;
}

bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    out += cs.find_first_of("+ ") != std::string::npos ? "(" + cs + ")" : cs;
    out += "*";
    if (m.empty()) out += "|0>";
    for (const auto& g : m) out += "a" + std::to_string(g.mode) + "(" + space_->labels[g.color] + ")";
  }
  return out;
}

int insert_generator(const SpaceHandle& s, const Monomial& m, Generator g, Monomial& out) {
  auto pos = std::lower_bound(m.begin(), m.end(), g);
  int sign = 1;
  if (s->odd[g.color]) {
    if (pos != m.end() && *pos == g) return 0;
    for (auto it = m.begin(); it != pos; ++it)
      if (s->odd[it->color]) sign = -sign;
  }
  out.clear();
  out.reserve(m.size() + 1);
  out.insert(out.end(), m.begin(), pos);
  out.push_back(g);
  out.insert(out.end(), pos, m.end());
  return sign;
}

FockVector apply(const ModeOp& op, const FockVector& v) {
  const auto& s = v.space();
  FockVector out(s);
  if (op.values.size() != s->size()) throw InvalidInput("mode operator and Fock space differ in colours");
  Monomial buf;
  for (const auto& [m, c] : v.terms()) {
    if (op.kind == ModeOp::creation) {
      for (std::size_t col = 0; col < op.values.size(); ++col) {
        if (op.values[col].is_zero()) continue;
        int sign = insert_generator(s, m, Generator{op.mode, static_cast<int>(col)}, buf);
        if (sign != 0) out.add(buf, CycNum(sign) * op.values[col] * c);
      }
    } else {
      int odd_before = 0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& g = m[i];
        if (g.mode == op.mode && !op.values[g.color].is_zero()) {
          buf.assign(m.begin(), m.end());
          buf.erase(buf.begin() + static_cast<long>(i));
          CycNum coef = op.values[g.color] * c;
          if (op.odd && odd_before % 2) coef = -coef;
          out.add(buf, coef);
        }
        if (s->odd[g.color]) ++odd_before;
      }
    }
  }
  return out;
}

bool Term::odd() const {
  bool p = false;
  for (const auto& op : ops) p ^= op.odd;
  return p;
}

FockOperator::FockOperator(SpaceHandle s, int shift, std::optional<int> max_input_weight)
    : space_(std::move(s)), shift_(shift), max_input_(max_input_weight) {}

FockOperator FockOperator::single(SpaceHandle s, const ModeOp& op) {
  FockOperator out(std::move(s), op.shift());
  out.add_term(Term{CycNum(1), {op}});
  return out;
}

void FockOperator::add_term(Term t) {
  int sh = 0;
  for (const auto& op : t.ops) sh += op.shift();
  if (sh != shift_) throw InvalidInput("term shift differs from operator shift");
  terms_.push_back(std::move(t));
}

namespace {

void check_cutoff(const std::optional<int>& limit, const FockVector& v) {
  if (limit && v.max_weight() > *limit)
    throw CutoffTooSmall("operator truncated at input weight " + std::to_string(*limit) + " applied to weight " +
                         std::to_string(v.max_weight()));
}

FockVector apply_term(const Term& t, const FockVector& v) {
  FockVector w = v;
  for (auto it = t.ops.rbegin(); it != t.ops.rend() && !w.is_zero(); ++it) w = apply(*it, w);
  return t.coef * w;
}

}  // namespace

namespace {

// Cheap necessary condition: every annihilator finds a generator of its mode with nonzero weight.
bool can_act(const Term& t, const Monomial& m) {
  for (const auto& op : t.ops) {
    if (op.kind != ModeOp::annihilation) continue;
    bool found = false;
    for (const auto& g : m) {
      if (g.mode == op.mode && !op.values[g.color].is_zero()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

FockVector FockOperator::apply(const FockVector& v) const {
  check_cutoff(max_input_, v);
  FockVector out(space_);
  for (const auto& [m, c] : v.terms()) {
    FockVector single = FockVector::monomial(space_, m, c);
    for (const auto& t : terms_)
      if (can_act(t, m)) out += apply_term(t, single);
  }
  return out;
}

FockOperator& FockOperator::operator+=(const FockOperator& o) {
  if (space_.get() != o.space_.get()) throw InvalidInput("operators on different Fock spaces");
  if (shift_ != o.shift_) throw InvalidInput("adding operators of different shifts");
  if (o.max_input_ && (!max_input_ || *o.max_input_ < *max_input_)) max_input_ = o.max_input_;
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

FockOperator operator-(FockOperator a, const FockOperator& b) { return a += CycNum(-1) * b; }

FockOperator operator*(const CycNum& s, FockOperator a) {
  for (auto& t : a.terms_) t.coef = s * t.coef;
  return a;
}

namespace {

// Parity components of an operator; a homogeneous operator is returned as itself.
std::vector<std::pair<bool, std::shared_ptr<const FockOperator>>> parity_parts(const FockOperator& op) {
  bool has[2] = {false, false};
  for (const auto& t : op.terms()) has[t.odd()] = true;
  std::vector<std::pair<bool, std::shared_ptr<const FockOperator>>> out;
  for (bool p : {false, true}) {
    if (!has[p]) continue;
    if (!has[!p]) {
      out.emplace_back(p, std::shared_ptr<const FockOperator>(&op, [](const FockOperator*) {}));
      continue;
    }
    auto part = std::make_shared<FockOperator>(op.space(), op.shift(), op.max_input_weight());
    for (const auto& t : op.terms())
      if (t.odd() == p) part->add_term(t);
    out.emplace_back(p, std::move(part));
  }
  return out;
}

}  // namespace

FockVector supercommutator(const FockOperator& a, const FockOperator& b, const FockVector& v) {
  FockVector out(v.space());
  auto as = parity_parts(a), bs = parity_parts(b);
  for (const auto& [pa, ap] : as) {
    for (const auto& [pb, bp] : bs) {
      FockVector abv = ap->apply(bp->apply(v));
      FockVector bav = bp->apply(ap->apply(v));
      out += abv;
      out -= (pa && pb) ? CycNum(-1) * bav : bav;
    }
  }
  return out;
}

ModeOp Field::mode(int n) const {
  if (n > 0) return ModeOp{ModeOp::creation, n, odd, create};
  if (n < 0) {
    std::vector<CycNum> w(annihilate.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = CycNum(-n) * annihilate[i];
    return ModeOp{ModeOp::annihilation, -n, odd, w};
  }
  throw InvalidInput("mode 0 of a Heisenberg field acts as zero");
}

namespace {

void enumerate_modes(std::size_t i, std::size_t k, int remaining, int ann_budget, int create_bound,
                     std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (i == k) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int n = -ann_budget; n <= create_bound; ++n) {
    if (n == 0) continue;
    if (i + 1 == k && n != remaining) continue;
    cur[i] = n;
    enumerate_modes(i + 1, k, remaining - n, n < 0 ? ann_budget + n : ann_budget, create_bound, cur, out);
  }
}

}  // namespace

FockOperator normal_ordered_product(const SpaceHandle& s, const std::vector<Field>& fields, int total_mode,
                                    int max_input_weight) {
  if (fields.empty()) throw InvalidInput("normal-ordered product of no fields");
  if (max_input_weight < 0) throw InvalidInput("negative weight cutoff");
  const std::size_t k = fields.size();
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(k);
  enumerate_modes(0, k, total_mode, max_input_weight, std::max(total_mode, 0) + max_input_weight, cur, tuples);
  FockOperator out(s, total_mode, max_input_weight);
  for (const auto& modes : tuples) {
    std::vector<ModeOp> creations, annihilations;
    int sign = 1;
    bool tail_odd = false;
    for (std::size_t r = k; r-- > 0;) {
      if (modes[r] < 0) {
        if (fields[r].odd && tail_odd) sign = -sign;
        annihilations.push_back(fields[r].mode(modes[r]));
      }
      tail_odd ^= fields[r].odd;
    }
    for (std::size_t r = 0; r < k; ++r)
      if (modes[r] > 0) creations.push_back(fields[r].mode(modes[r]));
    Term t{CycNum(sign), std::move(creations)};
    t.ops.insert(t.ops.end(), annihilations.begin(), annihilations.end());
    out.add_term(std::move(t));
  }
  return out;
}

namespace {

void enumerate_monomials(const FockSpace& s, int remaining, Generator min_gen, bool strict, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  const int colors = static_cast<int>(s.size());
  for (int n = min_gen.mode; n <= remaining; ++n) {
    for (int c = (n == min_gen.mode ? min_gen.color : 0); c < colors; ++c) {
      Generator g{n, c};
      if (strict && g == min_gen) continue;
      cur.push_back(g);
      enumerate_monomials(s, remaining - n, g, s.odd[c], cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Monomial> monomials_of_weight(const FockSpace& s, int w) {
  std::vector<Monomial> out;
  if (w < 0) return out;
  Monomial cur;
  enumerate_monomials(s, w, Generator{1, 0}, false, cur, out);
  return out;
}

std::vector<long> graded_dimension(const FockSpace& s, int cutoff) {
  std::vector<long> dims;
  for (int w = 0; w <= cutoff; ++w) dims.push_back(static_cast<long>(monomials_of_weight(s, w).size()));
  return dims;
}

std::vector<long> graded_dimension(int even_colors, int odd_colors, int cutoff) {
  std::vector<std::string> labels;
  std::vector<bool> odd;
  for (int i = 0; i < even_colors; ++i) {
    labels.push_back("e" + std::to_string(i));
    odd.push_back(false);
  }
  for (int i = 0; i < odd_colors; ++i) {
    labels.push_back("o" + std::to_string(i));
    odd.push_back(true);
  }
  return graded_dimension(*make_space(labels, odd), cutoff);
}

}  // namespace wfk::fock
