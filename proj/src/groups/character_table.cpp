// Character table by simultaneous diagonalisation of the class-sum matrices.
//
// The eigenvector search runs over F_p with p ≡ 1 (mod exponent); each character value is then
// lifted to ℚ(ζ_o) from its eigenvalue multiplicities under the power maps, and the lifted table
// is verified exactly (central-character relations, orthonormality, Σ d² = |G|).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>

#include "wfk/errors.hpp"
#include "wfk/groups/classes.hpp"

namespace wfk::groups {

namespace {

using u64 = std::uint64_t;
using exact::CycNum;
using exact::Rational;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) throw DiagonalizationFailure("inverting zero mod p");
    return pow(a, p - 2);
  }
  u64 from(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    return static_cast<u64>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(const Fp& f) {
  std::vector<u64> factors;
  u64 m = f.p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < f.p; ++g) {
    bool ok = true;
    for (u64 q : factors) ok = ok && f.pow(g, (f.p - 1) / q) != 1;
    if (ok) return g;
  }
  throw DiagonalizationFailure("no primitive root");
}

using Vec = std::vector<u64>;

// Rows in reduced echelon form with their pivot columns.
struct Subspace {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

Subspace echelon(std::vector<Vec> rows, const Fp& f) {
  Subspace s;
  if (rows.empty()) return s;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    u64 inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      u64 m = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[r][j]));
    }
    s.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  s.rows = std::move(rows);
  return s;
}

// Null space of a square matrix (row-major vector of rows).
std::vector<Vec> null_space(std::vector<Vec> m, const Fp& f) {
  std::size_t n = m.size();
  auto s = echelon(std::move(m), f);
  std::vector<bool> is_piv(n, false);
  for (auto p : s.pivots) is_piv[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < s.pivots.size(); ++r) v[s.pivots[r]] = f.sub(0, s.rows[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial det(xI − R) by Faddeev–LeVerrier, lowest degree first.
Vec char_poly(const std::vector<Vec>& r, const Fp& f) {
  std::size_t n = r.size();
  Vec c(n + 1, 0);
  c[n] = 1;
  std::vector<Vec> m(n, Vec(n, 0));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = R M_{k-1} + c_{n-k+1} I
    std::vector<Vec> next(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (r[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] = f.add(next[i][j], f.mul(r[i][l], m[l][j]));
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] = f.add(next[i][i], c[n - k + 1]);
    m = std::move(next);
    // c_{n-k} = -tr(R M_k) / k
    u64 tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr = f.add(tr, f.mul(r[i][l], m[l][i]));
    c[n - k] = f.sub(0, f.mul(tr, f.inv(k)));
  }
  return c;
}

std::vector<u64> roots(const Vec& poly, const Fp& f) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.p; ++x) {
    u64 v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = f.add(f.mul(v, x), poly[i]);
    if (v == 0) out.push_back(x);
  }
  return out;
}

bool row_less(const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return exact::canonical_less(a[i], b[i]);
  }
  return false;
}

}  // namespace

CharacterTable character_table(const ClassedGroup& cg) {
  const auto& g = cg.group();
  const auto& cd = cg.classes();
  const std::size_t k = cd.size();
  const std::int64_t order = static_cast<std::int64_t>(g.order());
  int e = 1;
  for (int o : cd.rep_orders) e = std::lcm(e, o);

  u64 p = static_cast<u64>(e) + 1;
  u64 floor = std::max<u64>(2 * static_cast<u64>(order), 64);
  while (p <= floor || !is_prime(p)) p += static_cast<u64>(e);
  Fp f{p};
  u64 root = f.pow(primitive_root(f), (p - 1) / static_cast<u64>(e));

  const auto& n = cg.structure_constants();
  auto nk = [&](std::size_t a, std::size_t b, std::size_t c) { return n[(a * k + b) * k + c]; };

  Vec unit(k, 0);
  std::vector<Vec> ident;
  for (std::size_t i = 0; i < k; ++i) {
    Vec v(k, 0);
    v[i] = 1;
    ident.push_back(v);
  }
  std::vector<Subspace> spaces{echelon(ident, f)};

  for (std::size_t a = 1; a < k; ++a) {
    std::vector<Subspace> next;
    for (auto& sp : spaces) {
      std::size_t dim = sp.rows.size();
      if (dim == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      // R(i, j): coordinate i of M_a v_j in the echelon basis.
      std::vector<Vec> r(dim, Vec(dim, 0));
      for (std::size_t j = 0; j < dim; ++j) {
        Vec u(k, 0);
        for (std::size_t b = 0; b < k; ++b) {
          u64 s = 0;
          for (std::size_t c = 0; c < k; ++c) {
            if (sp.rows[j][c] == 0) continue;
            s = f.add(s, f.mul(f.from(nk(a, b, c)), sp.rows[j][c]));
          }
          u[b] = s;
        }
        Vec rest = u;
        for (std::size_t i = 0; i < dim; ++i) {
          u64 coef = u[sp.pivots[i]];
          r[i][j] = coef;
          for (std::size_t c = 0; c < k; ++c) rest[c] = f.sub(rest[c], f.mul(coef, sp.rows[i][c]));
        }
        for (auto x : rest)
          if (x != 0) throw DiagonalizationFailure("common eigenspace is not invariant");
      }
      std::size_t covered = 0;
      for (u64 lam : roots(char_poly(r, f), f)) {
        auto shifted = r;
        for (std::size_t i = 0; i < dim; ++i) shifted[i][i] = f.sub(shifted[i][i], lam);
        std::vector<Vec> full;
        for (const auto& coords : null_space(shifted, f)) {
          Vec v(k, 0);
          for (std::size_t i = 0; i < dim; ++i) {
            if (coords[i] == 0) continue;
            for (std::size_t c = 0; c < k; ++c) v[c] = f.add(v[c], f.mul(coords[i], sp.rows[i][c]));
          }
          full.push_back(std::move(v));
        }
        covered += full.size();
        next.push_back(echelon(std::move(full), f));
      }
      if (covered != dim) throw DiagonalizationFailure("class-sum matrix is not diagonalisable mod p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw DiagonalizationFailure("common eigenspaces did not split completely");

  CharacterTable table;
  table.exponent = e;
  for (const auto& sp : spaces) {
    Vec w = sp.rows[0];
    if (w[0] == 0) throw DiagonalizationFailure("central character vanishes at the identity");
    u64 s0 = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, s0);
    u64 sum = 0;
    for (std::size_t c = 0; c < k; ++c)
      sum = f.add(sum, f.mul(f.mul(w[c], w[cd.inverse_class[c]]), f.inv(f.from(cd.class_sizes[c]))));
    u64 d2 = f.mul(f.from(order), f.inv(sum));
    std::int64_t d = 0;
    for (std::int64_t t = 1; t * t <= order; ++t) {
      if (f.from(t * t) == d2) {
        d = t;
        break;
      }
    }
    if (d == 0) throw DiagonalizationFailure("no integer degree matches");
    Vec chi(k);
    for (std::size_t c = 0; c < k; ++c)
      chi[c] = f.mul(f.mul(f.from(d), w[c]), f.inv(f.from(cd.class_sizes[c])));

    std::vector<CycNum> row(k);
    for (std::size_t c = 0; c < k; ++c) {
      int o = cd.rep_orders[c];
      u64 z = f.pow(root, static_cast<u64>(e / o));
      u64 zinv = f.inv(z);
      std::vector<Rational> coeffs;
      CycNum value(0);
      for (int t = 0; t < o; ++t) {
        u64 acc = 0;
        for (int j = 0; j < o; ++j) {
          u64 tw = f.pow(zinv, static_cast<u64>(j) * static_cast<u64>(t));
          acc = f.add(acc, f.mul(chi[cg.power_class(static_cast<int>(c), j)], tw));
        }
        u64 m = f.mul(acc, f.inv(static_cast<u64>(o)));
        if (m > static_cast<u64>(d)) throw DiagonalizationFailure("eigenvalue multiplicity out of range");
        if (m != 0) value += CycNum(static_cast<long>(m)) * CycNum::root_of_unity(o, t);
      }
      if (value.is_rational()) value = CycNum(value.to_rational());
      row[c] = value;
    }
    table.irreducibles.push_back(std::move(row));
    table.degrees.push_back(static_cast<int>(d));
  }

  // Trivial first, then by degree, then by values.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  auto is_trivial = [&](std::size_t i) {
    for (const auto& v : table.irreducibles[i])
      if (v != CycNum(1)) return false;
    return true;
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    bool tx = is_trivial(x), ty = is_trivial(y);
    if (tx != ty) return tx;
    if (table.degrees[x] != table.degrees[y]) return table.degrees[x] < table.degrees[y];
    return row_less(table.irreducibles[x], table.irreducibles[y]);
  });
  CharacterTable sorted;
  sorted.exponent = e;
  for (auto i : idx) {
    sorted.irreducibles.push_back(table.irreducibles[i]);
    sorted.degrees.push_back(table.degrees[i]);
  }

  // Exact verification.
  std::int64_t sumsq = 0;
  for (int d : sorted.degrees) sumsq += static_cast<std::int64_t>(d) * d;
  if (sumsq != order) throw DiagonalizationFailure("sum of squared degrees differs from the order");
  if (!is_trivial(idx[0])) throw DiagonalizationFailure("trivial character missing");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      CycNum s(0);
      for (std::size_t c = 0; c < k; ++c)
        s += CycNum(static_cast<long>(cd.class_sizes[c])) * sorted.irreducibles[i][c] *
             sorted.irreducibles[j][cd.inverse_class[c]];
      s /= CycNum(static_cast<long>(order));
      if (s != CycNum(i == j ? 1 : 0)) throw DiagonalizationFailure("lifted table is not orthonormal");
    }
  }
  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<CycNum> omega(k);
    for (std::size_t c = 0; c < k; ++c)
      omega[c] = CycNum(exact::make_rational(cd.class_sizes[c], sorted.degrees[i])) * sorted.irreducibles[i][c];
    for (std::size_t a = 0; a < k && !failed; ++a) {
      for (std::size_t b = a; b < k; ++b) {
        CycNum rhs(0);
        for (std::size_t c = 0; c < k; ++c) {
          if (nk(a, b, c) != 0) rhs += CycNum(static_cast<long>(nk(a, b, c))) * omega[c];
        }
        if (rhs != omega[a] * omega[b]) {
          failed = true;
          break;
        }
      }
    }
  }
  if (failed) throw DiagonalizationFailure("lifted table violates the central character relations");
  return sorted;
}

}  // namespace wfk::groups
