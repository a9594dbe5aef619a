#include "wfk/groups/builtins.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "wfk/errors.hpp"

namespace wfk::groups {

namespace {

using exact::Rational;

CycNum z(int n, long k = 1) { return CycNum::root_of_unity(n, k); }

Mat2 diag(const CycNum& a, const CycNum& d) { return {a, 0, 0, d}; }

// a + bi + cj + dk ↦ [[a + bi, c + di], [−c + di, a − bi]].
Mat2 quaternion(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d) {
  CycNum i = z(4);
  return {a + b * i, c + d * i, -c + d * i, a - b * i};
}

}  // namespace

FiniteGroup trivial_group() { return FiniteGroup::from_table({0}, 1, {"e"}, std::vector<Mat2>{Mat2::identity()}); }

FiniteGroup cyclic(int k) {
  if (k < 1) throw InvalidInput("cyclic group needs k >= 1");
  if (k == 1) return trivial_group();
  return build_from_generators({diag(z(k), z(k, -1))});
}

FiniteGroup binary_dihedral(int m) {
  if (m < 2) throw InvalidInput("binary dihedral group needs m >= 2");
  return build_from_generators({diag(z(2 * m), z(2 * m, -1)), Mat2{0, 1, -1, 0}});
}

FiniteGroup binary_tetrahedral() {
  CycNum h(Rational(1, 2));
  return build_from_generators({quaternion(0, 1, 0, 0), quaternion(0, 0, 1, 0), quaternion(h, h, h, h)});
}

FiniteGroup binary_octahedral() {
  CycNum h(Rational(1, 2));
  return build_from_generators({quaternion(0, 1, 0, 0), quaternion(0, 0, 1, 0), quaternion(h, h, h, h),
                                diag(z(8), z(8, -1))});
}

FiniteGroup binary_icosahedral() {
  CycNum h(Rational(1, 2));
  // φ = (1 + √5)/2 = 1 + ζ_5 + ζ_5⁴, and φ⁻¹ = φ − 1.
  CycNum phi = CycNum(1) + z(5) + z(5, 4);
  CycNum phinv = phi - CycNum(1);
  return build_from_generators({quaternion(h, h, h, h), quaternion(h * phi, h * phinv, h, 0)});
}

FiniteGroup symmetric(int n) {
  if (n < 0) throw InvalidInput("symmetric group needs n >= 0");
  std::vector<int> perm(std::max(n, 0));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> elems;
  do {
    elems.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<int>, std::uint32_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<std::uint32_t>(i);
  std::size_t order = elems.size();
  std::vector<std::uint32_t> mult(order * order);
  std::vector<int> prod(n);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      // (ab)(i) = a(b(i))
      for (int i = 0; i < n; ++i) prod[i] = elems[a][elems[b][i]];
      mult[a * order + b] = index[prod];
    }
  }
  std::vector<std::string> labels;
  for (const auto& e : elems) {
    std::string s = "[";
    for (int i = 0; i < n; ++i) s += (i ? " " : "") + std::to_string(e[i] + 1);
    labels.push_back(s + "]");
  }
  return FiniteGroup::from_table(std::move(mult), order, std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::uint32_t> mult(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto xa = static_cast<std::uint32_t>(x / nb), xb = static_cast<std::uint32_t>(x % nb);
      auto ya = static_cast<std::uint32_t>(y / nb), yb = static_cast<std::uint32_t>(y % nb);
      mult[x * n + y] = a.mul(xa, ya) * static_cast<std::uint32_t>(nb) + b.mul(xb, yb);
    }
  }
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty()) {
    for (std::size_t x = 0; x < n; ++x) labels.push_back("(" + a.labels()[x / nb] + "," + b.labels()[x % nb] + ")");
  }
  return FiniteGroup::from_table(std::move(mult), n, std::move(labels));
}

namespace {

GroupHandle build_builtin(const std::string& spec) {
  std::string s = spec;
  if (s.rfind("builtin:", 0) == 0) s = s.substr(8);
  std::string head = s, arg;
  if (auto pos = s.find(':'); pos != std::string::npos) {
    head = s.substr(0, pos);
    arg = s.substr(pos + 1);
  }
  auto num = [&]() {
    try {
      return std::stoi(arg);
    } catch (const std::exception&) {
      throw InvalidInput("builtin group '" + spec + "' needs an integer parameter");
    }
  };
  std::string name = "builtin:" + s;
  if (head == "trivial") return make_group(trivial_group(), name);
  if (head == "cyclic") return make_group(cyclic(num()), name);
  if (head == "binary-dihedral") return make_group(binary_dihedral(num()), name);
  if (head == "binary-tetrahedral") return make_group(binary_tetrahedral(), name);
  if (head == "binary-octahedral") return make_group(binary_octahedral(), name);
  if (head == "binary-icosahedral") return make_group(binary_icosahedral(), name);
  if (head == "symmetric") return make_group(symmetric(num()), name);
  throw InvalidInput("unknown builtin group '" + spec + "'");
}

}  // namespace

// Cached so that repeated lookups share one handle (class functions compare groups by identity).
GroupHandle builtin_group(const std::string& spec) {
  static std::mutex mu;
  static std::map<std::string, GroupHandle> cache;
  std::string key = spec.rfind("builtin:", 0) == 0 ? spec.substr(8) : spec;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  GroupHandle g = build_builtin(spec);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, g).first->second;
}

}  // namespace wfk::groups
