#include "wfk/wreath/types.hpp"

#include "wfk/errors.hpp"

namespace wfk::wreath {

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

int Partition::multiplicity(int r) const {
  int m = 0;
  for (int p : parts) m += (p == r);
  return m;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back({cur});
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

void types_rec(int k, int c, int remaining, std::vector<Partition>& cur, std::vector<TypeFunction>& out) {
  if (c == k - 1) {
    for (const auto& p : partitions(remaining)) {
      cur[c] = p;
      out.push_back({cur});
    }
    return;
  }
  for (int take = remaining; take >= 0; --take) {
    for (const auto& p : partitions(take)) {
      cur[c] = p;
      types_rec(k, c + 1, remaining - take, cur, out);
    }
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw InvalidInput("partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

int TypeFunction::total() const {
  int s = 0;
  for (const auto& p : by_class) s += p.size();
  return s;
}

std::string TypeFunction::to_string() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    if (by_class[c].parts.empty()) continue;
    s += (first ? "" : ",") + std::to_string(c) + ":" + by_class[c].to_string();
    first = false;
  }
  return s + "}";
}

std::vector<TypeFunction> enumerate_types(int num_classes, int n) {
  if (n < 0) throw InvalidInput("negative level");
  if (num_classes < 1) throw InvalidInput("a group has at least one class");
  std::vector<TypeFunction> out;
  std::vector<Partition> cur(num_classes);
  types_rec(num_classes, 0, n, cur, out);
  return out;
}

exact::Integer centralizer_order(const groups::ClassedGroup& g, const TypeFunction& t) {
  exact::Integer z = 1;
  const auto& zc = g.classes().centralizer_orders;
  for (std::size_t c = 0; c < t.by_class.size(); ++c) {
    const auto& p = t.by_class[c];
    if (p.parts.empty()) continue;
    exact::Integer zeta = static_cast<long>(zc[c]);
    exact::Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), zeta.get_mpz_t(), static_cast<unsigned long>(p.length()));
    z *= pw;
    int r_prev = 0;
    for (int r : p.parts) {
      if (r == r_prev) continue;
      r_prev = r;
      int m = p.multiplicity(r);
      exact::Integer rm;
      mpz_ui_pow_ui(rm.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(m));
      z *= rm * exact::factorial(m);
    }
  }
  return z;
}

TypeFunction inverse_type(const groups::ClassedGroup& g, const TypeFunction& t) {
  TypeFunction out;
  out.by_class.resize(t.by_class.size());
  for (std::size_t c = 0; c < t.by_class.size(); ++c) out.by_class[g.classes().inverse_class[c]] = t.by_class[c];
  return out;
}

TypeFunction cycle_type(int num_classes, int c, int n) {
  TypeFunction t;
  t.by_class.resize(num_classes);
  t.by_class[c].parts = {n};
  return t;
}

}  // namespace wfk::wreath
