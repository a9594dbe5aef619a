#include "wfk/groups/group.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <random>

#include "wfk/errors.hpp"

namespace wfk::groups {

Mat2 Mat2::inverse() const {
  CycNum dt = det();
  if (dt.is_zero()) throw NonInvertibleMatrix("matrix with zero determinant");
  CycNum s = CycNum(1) / dt;
  return {d * s, -b * s, -c * s, a * s};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

bool operator==(const Mat2& x, const Mat2& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

std::string Mat2::key(int n) const {
  return a.embed(n).to_string() + "|" + b.embed(n).to_string() + "|" + c.embed(n).to_string() +
         "|" + d.embed(n).to_string();
}

FiniteGroup FiniteGroup::from_table(std::vector<std::uint32_t> mult, std::size_t order,
                                    std::vector<std::string> labels,
                                    std::optional<std::vector<Mat2>> matrices) {
  if (order == 0 || mult.size() != order * order) throw InvalidInput("table size mismatch");
  for (auto v : mult)
    if (v >= order) throw InvalidInput("table entry out of range");
  FiniteGroup g;
  g.order_ = order;
  g.mult_ = std::move(mult);
  g.labels_ = std::move(labels);
  if (!g.labels_.empty() && g.labels_.size() != order) throw InvalidInput("label count mismatch");

  bool found = false;
  for (std::uint32_t e = 0; e < order && !found; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < order && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidInput("table has no identity");

  std::vector<char> seen(order);
  for (std::uint32_t x = 0; x < order; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t y = 0; y < order; ++y) {
      auto v = g.mul(x, y);
      if (seen[v]) throw InvalidInput("table is not a latin square");
      seen[v] = 1;
    }
  }
  g.inverse_.assign(order, 0);
  for (std::uint32_t x = 0; x < order; ++x) {
    for (std::uint32_t y = 0; y < order; ++y) {
      if (g.mul(x, y) == g.identity_) {
        if (g.mul(y, x) != g.identity_) throw InvalidInput("inverse law fails");
        g.inverse_[x] = y;
        break;
      }
    }
  }

  auto assoc = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) throw InvalidInput("table is not associative");
  };
  if (order <= 512) {
    for (std::uint32_t x = 0; x < order; ++x)
      for (std::uint32_t y = 0; y < order; ++y)
        for (std::uint32_t z = 0; z < order; ++z) assoc(x, y, z);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(order - 1));
    for (int i = 0; i < 200000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }

  if (matrices) {
    if (matrices->size() != order) throw InvalidInput("matrix model size mismatch");
    for (std::uint32_t x = 0; x < order; ++x) {
      if ((*matrices)[x].det() != CycNum(1)) throw InvalidInput("matrix model determinant is not 1");
    }
    auto check = [&](std::uint32_t x, std::uint32_t y) {
      if (!((*matrices)[x] * (*matrices)[y] == (*matrices)[g.mul(x, y)]))
        throw InvalidInput("matrix model disagrees with the table");
    };
    if (order <= 128) {
      for (std::uint32_t x = 0; x < order; ++x)
        for (std::uint32_t y = 0; y < order; ++y) check(x, y);
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(order - 1));
      for (int i = 0; i < 4000; ++i) check(pick(rng), pick(rng));
    }
    g.matrices_ = std::move(matrices);
  }
  return g;
}

int FiniteGroup::element_order(std::uint32_t x) const {
  int k = 1;
  std::uint32_t y = x;
  while (y != identity_) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (std::uint32_t x = 0; x < order_; ++x) e = std::lcm(e, element_order(x));
  return e;
}

FiniteGroup build_from_generators(const std::vector<Mat2>& gens, std::size_t bound) {
  for (const auto& m : gens) {
    if (m.det().is_zero()) throw NonInvertibleMatrix("generator is singular");
  }
  int cond = 1;
  for (const auto& m : gens) {
    for (const auto* e : {&m.a, &m.b, &m.c, &m.d}) cond = std::lcm(cond, e->conductor());
  }
  std::vector<Mat2> elems{Mat2::identity()};
  std::map<std::string, std::uint32_t> index{{elems[0].key(cond), 0}};
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& gen : gens) {
      Mat2 next = elems[cur] * gen;
      auto key = next.key(cond);
      if (index.count(key)) continue;
      if (elems.size() >= bound) throw ClosureBoundExceeded("generated group exceeds the closure bound");
      index.emplace(key, static_cast<std::uint32_t>(elems.size()));
      queue.push_back(static_cast<std::uint32_t>(elems.size()));
      elems.push_back(std::move(next));
    }
  }
  std::size_t n = elems.size();
  std::vector<std::uint32_t> mult(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find((elems[i] * elems[j]).key(cond));
      if (it == index.end()) throw InvalidInput("matrix closure is not a group");
      mult[i * n + j] = it->second;
    }
  }
  return FiniteGroup::from_table(std::move(mult), n, {}, std::move(elems));
}

}  // namespace wfk::groups
