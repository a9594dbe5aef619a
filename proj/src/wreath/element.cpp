#include "wfk/wreath/element.hpp"

#include <algorithm>
#include <numeric>

#include "wfk/errors.hpp"

namespace wfk::wreath {

WreathElement identity_element(const groups::FiniteGroup& base, int n) {
  WreathElement e;
  e.g.assign(n, base.identity());
  e.s.resize(n);
  std::iota(e.s.begin(), e.s.end(), 0);
  return e;
}

WreathElement multiply(const groups::FiniteGroup& base, const WreathElement& a, const WreathElement& b) {
  const int n = a.n();
  if (b.n() != n) throw InvalidInput("wreath elements of different levels");
  std::vector<int> sinv(n);
  for (int i = 0; i < n; ++i) sinv[a.s[i]] = i;
  WreathElement out;
  out.g.resize(n);
  out.s.resize(n);
  for (int i = 0; i < n; ++i) {
    out.g[i] = base.mul(a.g[i], b.g[sinv[i]]);
    out.s[i] = a.s[b.s[i]];
  }
  return out;
}

WreathElement inverse(const groups::FiniteGroup& base, const WreathElement& a) {
  // (g, s)⁻¹ = (s⁻¹(g⁻¹), s⁻¹), and s⁻¹(h)_i = h_{s(i)}.
  const int n = a.n();
  WreathElement out;
  out.g.resize(n);
  out.s.resize(n);
  for (int i = 0; i < n; ++i) {
    out.s[a.s[i]] = i;
    out.g[i] = base.inv(a.g[a.s[i]]);
  }
  return out;
}

int cycle_product_class(const groups::ClassedGroup& base, const WreathElement& a, int i) {
  // Component at i of a^r: g_i g_{s⁻¹(i)} g_{s⁻²(i)} ⋯
  const int n = a.n();
  std::vector<int> sinv(n);
  for (int j = 0; j < n; ++j) sinv[a.s[j]] = j;
  const auto& G = base.group();
  std::uint32_t prod = a.g[i];
  for (int j = sinv[i]; j != i; j = sinv[j]) prod = G.mul(prod, a.g[j]);
  return base.classes().class_of[prod];
}

TypeFunction type_of(const groups::ClassedGroup& base, const WreathElement& a) {
  const int n = a.n();
  const auto& G = base.group();
  std::vector<int> sinv(n);
  for (int j = 0; j < n; ++j) sinv[a.s[j]] = j;
  std::vector<char> seen(n, 0);
  TypeFunction t;
  t.by_class.resize(base.num_classes());
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::uint32_t prod = a.g[i];
    seen[i] = 1;
    int len = 1;
    for (int j = sinv[i]; j != i; j = sinv[j]) {
      prod = G.mul(prod, a.g[j]);
      seen[j] = 1;
      ++len;
    }
    t.by_class[base.classes().class_of[prod]].parts.push_back(len);
  }
  for (auto& p : t.by_class) std::sort(p.parts.begin(), p.parts.end(), std::greater<int>());
  return t;
}

int permutation_sign(const WreathElement& a) {
  const int n = a.n();
  std::vector<char> seen(n, 0);
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = a.s[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

WreathElement representative(const groups::ClassedGroup& base, const TypeFunction& t) {
  WreathElement e = identity_element(base.group(), t.total());
  int pos = 0;
  for (std::size_t c = 0; c < t.by_class.size(); ++c) {
    for (int r : t.by_class[c].parts) {
      // r-cycle pos → pos+1 → … → pos, with the class rep at the first slot
      for (int j = 0; j < r; ++j) e.s[pos + j] = pos + (j + 1) % r;
      e.g[pos] = base.classes().class_reps[c];
      pos += r;
    }
  }
  return e;
}

WreathElement embed_pair(const WreathElement& a, const WreathElement& b) {
  WreathElement e;
  const int n = a.n();
  e.g = a.g;
  e.g.insert(e.g.end(), b.g.begin(), b.g.end());
  e.s = a.s;
  for (int v : b.s) e.s.push_back(v + n);
  return e;
}

namespace {

std::uint64_t perm_rank(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  std::uint64_t rank = 0;
  std::vector<char> used(n, 0);
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int v = 0; v < s[i]; ++v) smaller += !used[v];
    used[s[i]] = 1;
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  return rank;
}

std::vector<int> perm_unrank(int n, std::uint64_t rank) {
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 0);
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) {
    s[i] = avail[digits[i]];
    avail.erase(avail.begin() + digits[i]);
  }
  return s;
}

}  // namespace

std::uint64_t element_index(std::size_t base_order, const WreathElement& a) {
  std::uint64_t digits = 0;
  std::uint64_t pw = 1;
  for (int i = 0; i < a.n(); ++i) {
    digits = digits * base_order + a.g[i];
    pw *= base_order;
  }
  return perm_rank(a.s) * pw + digits;
}

WreathElement element_at(std::size_t base_order, int n, std::uint64_t index) {
  std::uint64_t pw = 1;
  for (int i = 0; i < n; ++i) pw *= base_order;
  WreathElement e;
  e.s = perm_unrank(n, index / pw);
  std::uint64_t digits = index % pw;
  e.g.resize(n);
  for (int i = n - 1; i >= 0; --i) {
    e.g[i] = static_cast<std::uint32_t>(digits % base_order);
    digits /= base_order;
  }
  return e;
}

}  // namespace wfk::wreath
