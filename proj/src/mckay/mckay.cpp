#include "wfk/mckay/mckay.hpp"

#include <algorithm>
#include <functional>

#include "wfk/errors.hpp"

namespace wfk::mckay {

using exact::CycNum;
using exact::Rational;
using groups::ClassFunction;

namespace {

long to_long(const CycNum& x) {
  if (!x.is_rational()) throw NonIntegralResult("value is not rational: " + x.to_string());
  Rational r = x.to_rational();
  if (r.get_den() != 1) throw NonIntegralResult("value is not an integer: " + x.to_string());
  return r.get_num().get_si();
}

}  // namespace

McKayData mckay_data(const groups::GroupHandle& g) {
  McKayData d;
  d.group = g;
  d.q = ClassFunction::matrix_trace(g);
  d.xi = CycNum(2) * ClassFunction::trivial(g) - d.q;
  const auto& table = g->characters();
  const std::size_t k = table.size();
  std::vector<ClassFunction> irr;
  for (std::size_t i = 0; i < k; ++i) irr.push_back(ClassFunction::irreducible(g, static_cast<int>(i)));
  d.adjacency.assign(k, std::vector<long>(k, 0));
  d.cartan.assign(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      d.adjacency[i][j] = to_long(groups::inner_product(d.q.pointwise(irr[i]), irr[j]));
      d.cartan[i][j] = to_long(groups::inner_product(d.xi.pointwise(irr[i]), irr[j]));
    }
    d.marks.push_back(table.degrees[i]);
  }
  return d;
}

std::string classify_affine_ade(const IntMatrix& c) {
  const std::size_t n = c.size();
  auto fail = [](const std::string& why) -> std::string { throw NotAffineADE(why); };
  if (n < 2) return fail("need at least two vertices");
  IntMatrix a(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) return fail("matrix is not square");
    if (c[i][i] != 2) return fail("diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (c[i][j] != c[j][i]) return fail("matrix is not symmetric");
      if (i != j) a[i][j] = -c[i][j];
      if (i != j && a[i][j] < 0) return fail("positive off-diagonal entry");
    }
  }
  exact::Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(c[i][j]);
  if (exact::rank(m) != n - 1) return fail("corank is not 1");

  // Connectivity.
  std::vector<int> seen(n, 0);
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    seen[v] = 1;
    for (std::size_t u = 0; u < n; ++u)
      if (a[v][u] && !seen[u]) visit(u);
  };
  visit(0);
  if (std::count(seen.begin(), seen.end(), 0)) return fail("graph is not connected");

  if (n == 2) return a[0][1] == 2 ? "A1~" : fail("two vertices need a double edge");
  std::vector<int> deg(n, 0);
  long edges = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j] > 1) return fail("multiple edge");
      deg[i] += static_cast<int>(a[i][j]);
      if (j > i) edges += a[i][j];
    }
  if (edges == static_cast<long>(n)) {
    if (std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; })) return "A" + std::to_string(n - 1) + "~";
    return fail("cycle with branches");
  }
  if (edges != static_cast<long>(n) - 1) return fail("unexpected edge count");

  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (deg[i] > 4) return fail("vertex of degree above 4");
    if (deg[i] >= 3) branch.push_back(i);
  }
  auto leg = [&](std::size_t from, std::size_t start) {
    int len = 1;
    std::size_t prev = from, cur = start;
    while (deg[cur] == 2) {
      std::size_t next = n;
      for (std::size_t u = 0; u < n; ++u)
        if (a[cur][u] && u != prev) next = u;
      prev = cur;
      cur = next;
      ++len;
    }
    return deg[cur] == 1 ? len : -1;
  };
  if (branch.size() == 1 && deg[branch[0]] == 4) {
    return n == 5 ? "D4~" : fail("degree-4 vertex in a long tree");
  }
  if (branch.size() == 2 && deg[branch[0]] == 3 && deg[branch[1]] == 3) {
    for (std::size_t b : branch) {
      int leaves = 0;
      for (std::size_t u = 0; u < n; ++u)
        if (a[b][u] && deg[u] == 1) ++leaves;
      if (leaves != 2) return fail("branch vertex without two leaves");
    }
    return "D" + std::to_string(n - 1) + "~";
  }
  if (branch.size() == 1) {
    std::vector<int> legs;
    for (std::size_t u = 0; u < n; ++u)
      if (a[branch[0]][u]) legs.push_back(leg(branch[0], u));
    std::sort(legs.begin(), legs.end());
    if (legs == std::vector<int>{2, 2, 2}) return "E6~";
    if (legs == std::vector<int>{1, 3, 3}) return "E7~";
    if (legs == std::vector<int>{1, 2, 5}) return "E8~";
  }
  return fail("tree is not an affine ADE diagram");
}

exact::Matrix<CycNum> block_matrix(const groups::FiniteGroup& base, const wreath::WreathElement& x) {
  if (!base.has_matrix_model()) throw MissingMatrixModel("group has no 2x2 matrix model");
  const auto& mats = *base.matrices();
  const int n = x.n();
  exact::Matrix<CycNum> m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    const int r = x.s[i];
    const auto& g = mats[x.g[r]];
    m(2 * r, 2 * i) = g.a;
    m(2 * r, 2 * i + 1) = g.b;
    m(2 * r + 1, 2 * i) = g.c;
    m(2 * r + 1, 2 * i + 1) = g.d;
  }
  return m;
}

CycNum koszul_determinant(const groups::FiniteGroup& base, const wreath::WreathElement& x) {
  auto m = block_matrix(base, x);
  auto id = exact::Matrix<CycNum>::identity(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) id(i, j) -= m(i, j);
  return exact::determinant(id);
}

Report koszul_thom_check(const groups::GroupHandle& g, int n, std::size_t budget) {
  Report r;
  r.suite = "koszul-thom";
  auto d = mckay_data(g);
  auto w = wreath::build_wreath(g, n, budget);
  auto eta = wreath::eta_eps(w.level, d.xi, false);
  for (std::size_t j = 0; j < w.level->size(); ++j) {
    auto x = wreath::representative(*g, w.level->type(j));
    auto lhs = koszul_determinant(g->group(), x);
    r.add("n=" + std::to_string(n) + " class=" + w.level->type(j).to_string(), lhs.to_string(), eta[j].to_string(),
          lhs == eta[j]);
  }
  return r;
}

QuiverDimension quiver_dimension(const McKayData& data, int n) {
  QuiverDimension q;
  const std::size_t k = data.marks.size();
  for (std::size_t i = 0; i < k; ++i) {
    q.v.push_back(n * data.marks[i]);
    q.w.push_back(i == 0 ? 1 : 0);
  }
  long vcv = 0, vw = 0;
  for (std::size_t i = 0; i < k; ++i) {
    long s = 0;
    for (std::size_t j = 0; j < k; ++j) s += data.cartan[i][j] * q.v[j];
    q.cv.push_back(s);
    vcv += q.v[i] * s;
    vw += q.v[i] * q.w[i];
  }
  q.dim = 2 * vw - vcv;
  return q;
}

WeightedGram weighted_gram_wreath(const groups::GroupHandle& g, int n, std::size_t budget) {
  auto d = mckay_data(g);
  auto w = wreath::build_wreath(g, n, budget);
  WeightedGram out;
  const auto& table = w.group->characters();
  for (std::size_t i = 0; i < table.size(); ++i)
    out.irreducibles.push_back(w.from_table(ClassFunction::irreducible(w.group, static_cast<int>(i))));
  const std::size_t k = out.irreducibles.size();
  out.gram = exact::Matrix<CycNum>(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      out.gram(i, j) = wreath::weighted_form(out.irreducibles[i], out.irreducibles[j], d.xi);
    }
  }
  return out;
}

}  // namespace wfk::mckay
