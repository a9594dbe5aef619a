#include "wfk/fock/frobenius.hpp"

#include <fstream>
#include <map>

#include "wfk/errors.hpp"

namespace wfk::fock {

Element operator+(const Element& a, const Element& b) {
  Element c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

Element operator*(const Rational& s, const Element& a) {
  Element c(a);
  for (auto& x : c) x *= s;
  return c;
}

FrobeniusAlgebra::FrobeniusAlgebra(std::string name, std::vector<std::string> labels, std::vector<int> degrees,
                                   std::vector<std::vector<Element>> mult, Element trace, Element unit,
                                   std::optional<Element> euler_class, std::optional<Element> canonical_class)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      degrees_(std::move(degrees)),
      mult_(std::move(mult)),
      trace_(std::move(trace)),
      unit_(std::move(unit)),
      euler_(std::move(euler_class)),
      canonical_(std::move(canonical_class)) {
  validate();
}

void FrobeniusAlgebra::validate() const {
  const std::size_t n = dim();
  if (degrees_.size() != n || trace_.size() != n || unit_.size() != n || mult_.size() != n)
    throw InvalidInput("algebra data has inconsistent dimensions");
  for (const auto& row : mult_) {
    if (row.size() != n) throw InvalidInput("multiplication table has wrong shape");
    for (const auto& e : row)
      if (e.size() != n) throw InvalidInput("multiplication table has wrong shape");
  }
  for (const auto* e : {euler_ ? &*euler_ : nullptr, canonical_ ? &*canonical_ : nullptr})
    if (e && e->size() != n) throw InvalidInput("designated element has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational sign = (odd(i) && odd(j)) ? -1 : 1;
      if (mult_[i][j] != sign * mult_[j][i]) throw InvalidInput("algebra is not graded-commutative");
      for (std::size_t k = 0; k < n; ++k) {
        if (multiply(multiply(basis(i), basis(j)), basis(k)) != multiply(basis(i), multiply(basis(j), basis(k))))
          throw InvalidInput("algebra is not associative");
      }
    }
    if (multiply(unit_, basis(i)) != basis(i)) throw InvalidInput("unit element does not act as identity");
  }
}

Element FrobeniusAlgebra::basis(std::size_t i) const {
  Element e(dim());
  e[i] = 1;
  return e;
}

Element FrobeniusAlgebra::multiply(const Element& x, const Element& y) const {
  Element z(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      Rational s = x[i] * y[j];
      const auto& m = mult_[i][j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (m[k] != 0) z[k] += s * m[k];
    }
  }
  return z;
}

Rational FrobeniusAlgebra::integral(const Element& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) s += x[i] * trace_[i];
  return s;
}

bool FrobeniusAlgebra::parity_of(const Element& x) const {
  bool seen_even = false, seen_odd = false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    (odd(i) ? seen_odd : seen_even) = true;
  }
  if (seen_even && seen_odd) throw InvalidInput("element has mixed parity");
  return seen_odd;
}

exact::Matrix<Rational> FrobeniusAlgebra::pairing_matrix() const {
  exact::Matrix<Rational> g(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) g(i, j) = integral(mult_[i][j]);
  return g;
}

bool FrobeniusAlgebra::nondegenerate() const { return exact::rank(pairing_matrix()) == dim(); }

std::vector<Element> FrobeniusAlgebra::dual_basis() const {
  if (!nondegenerate()) throw DegeneratePairing("trace pairing of model '" + name_ + "' is degenerate");
  // ∫(e_i d_j) = Σ_k G_ik D_kj = δ_ij, so D = G⁻¹.
  auto inv = exact::inverse(pairing_matrix());
  std::vector<Element> d(dim(), Element(dim()));
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = 0; k < dim(); ++k) d[j][k] = inv(k, j);
  return d;
}

FrobeniusAlgebra FrobeniusAlgebra::with_canonical_class(std::optional<Element> k) const {
  FrobeniusAlgebra a(*this);
  a.canonical_ = std::move(k);
  a.validate();
  return a;
}

namespace {

struct Builder {
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<Element>> mult;

  void add(const std::string& l, int d) {
    index[l] = labels.size();
    labels.push_back(l);
    degrees.push_back(d);
  }
  void init() { mult.assign(labels.size(), std::vector<Element>(labels.size(), Element(labels.size()))); }
  Element elem(std::initializer_list<std::pair<const char*, long>> terms) const {
    Element e(labels.size());
    for (const auto& [l, c] : terms) e[index.at(l)] = c;
    return e;
  }
  void set(const std::string& a, const std::string& b, const Element& c) {
    std::size_t i = index.at(a), j = index.at(b);
    mult[i][j] = c;
    Rational sign = (degrees[i] % 2 != 0 && degrees[j] % 2 != 0) ? -1 : 1;
    mult[j][i] = sign * c;
  }
};

FrobeniusAlgebra exterior_surface() {
  // H*(E × E): exterior algebra on four degree-1 classes.
  Builder b;
  std::vector<unsigned> masks;
  for (int size = 0; size <= 4; ++size)
    for (unsigned m = 0; m < 16; ++m)
      if (__builtin_popcount(m) == size) masks.push_back(m);
  auto label = [](unsigned m) {
    if (m == 0) return std::string("1");
    std::string s;
    for (int i = 0; i < 4; ++i)
      if (m & (1u << i)) s += "e" + std::to_string(i + 1);
    return s;
  };
  for (unsigned m : masks) b.add(label(m), __builtin_popcount(m));
  b.init();
  for (unsigned x : masks) {
    for (unsigned y : masks) {
      if (x & y) continue;
      // Sign of moving each generator of y past the larger generators of x.
      int swaps = 0;
      for (int i = 0; i < 4; ++i)
        if (y & (1u << i))
          for (int j = i + 1; j < 4; ++j)
            if (x & (1u << j)) ++swaps;
      Element e(16);
      e[b.index.at(label(x | y))] = swaps % 2 ? -1 : 1;
      b.mult[b.index.at(label(x))][b.index.at(label(y))] = e;
    }
  }
  Element trace(16);
  trace[b.index.at("e1e2e3e4")] = 1;
  return FrobeniusAlgebra("abelian-surface", b.labels, b.degrees, b.mult, trace, b.elem({{"1", 1}}),
                          Element(16), Element(16));
}

}  // namespace

FrobeniusAlgebra builtin_model(const std::string& name) {
  Builder b;
  if (name == "point") {
    b.add("pt", 0);
    b.init();
    b.set("pt", "pt", b.elem({{"pt", 1}}));
    return FrobeniusAlgebra(name, b.labels, b.degrees, b.mult, b.elem({{"pt", 1}}), b.elem({{"pt", 1}}),
                            b.elem({{"pt", 1}}));
  }
  if (name == "p2") {
    b.add("1", 0);
    b.add("h", 2);
    b.add("h2", 4);
    b.init();
    b.set("1", "1", b.elem({{"1", 1}}));
    b.set("1", "h", b.elem({{"h", 1}}));
    b.set("1", "h2", b.elem({{"h2", 1}}));
    b.set("h", "h", b.elem({{"h2", 1}}));
    return FrobeniusAlgebra(name, b.labels, b.degrees, b.mult, b.elem({{"h2", 1}}), b.elem({{"1", 1}}),
                            b.elem({{"h2", 3}}), b.elem({{"h", -3}}));
  }
  if (name == "p1xp1") {
    b.add("1", 0);
    b.add("a", 2);
    b.add("b", 2);
    b.add("ab", 4);
    b.init();
    for (const char* x : {"1", "a", "b", "ab"}) b.set("1", x, b.elem({{x, 1}}));
    b.set("a", "b", b.elem({{"ab", 1}}));
    return FrobeniusAlgebra(name, b.labels, b.degrees, b.mult, b.elem({{"ab", 1}}), b.elem({{"1", 1}}),
                            b.elem({{"ab", 4}}), b.elem({{"a", -2}, {"b", -2}}));
  }
  if (name == "affine-plane") {
    b.add("1", 0);
    b.init();
    b.set("1", "1", b.elem({{"1", 1}}));
    return FrobeniusAlgebra(name, b.labels, b.degrees, b.mult, b.elem({{"1", 0}}), b.elem({{"1", 1}}));
  }
  if (name == "abelian-surface") return exterior_surface();
  throw InvalidInput("unknown built-in model '" + name + "'");
}

namespace {

Element element_from_json(const nlohmann::json& j, const std::map<std::string, std::size_t>& index, std::size_t n) {
  Element e(n);
  if (!j.is_object()) throw InvalidInput("algebra element must be an object label -> rational");
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto f = index.find(it.key());
    if (f == index.end()) throw InvalidInput("unknown basis label '" + it.key() + "'");
    e[f->second] = exact::parse_rational(it.value().get<std::string>());
  }
  return e;
}

nlohmann::json element_to_json(const FrobeniusAlgebra& a, const Element& e) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (e[i] != 0) j[a.labels()[i]] = exact::to_string(e[i]);
  return j;
}

}  // namespace

FrobeniusAlgebra model_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::map<std::string, std::size_t> index;
    for (const auto& b : j.at("basis")) {
      index[b.at("label").get<std::string>()] = labels.size();
      labels.push_back(b.at("label").get<std::string>());
      degrees.push_back(b.at("degree").get<int>());
    }
    const std::size_t n = labels.size();
    std::vector<std::vector<Element>> mult(n, std::vector<Element>(n, Element(n)));
    std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
    for (const auto& p : j.at("products")) {
      std::size_t a = index.at(p.at("a").get<std::string>()), b = index.at(p.at("b").get<std::string>());
      mult[a][b] = element_from_json(p.at("c"), index, n);
      given[a][b] = true;
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (given[a][b] || !given[b][a]) continue;
        Rational sign = (degrees[a] % 2 != 0 && degrees[b] % 2 != 0) ? -1 : 1;
        mult[a][b] = sign * mult[b][a];
      }
    }
    auto opt = [&](const char* key) -> std::optional<Element> {
      if (!j.contains(key)) return std::nullopt;
      return element_from_json(j.at(key), index, n);
    };
    return FrobeniusAlgebra(j.value("name", std::string("model")), labels, degrees, mult,
                            element_from_json(j.at("trace"), index, n), element_from_json(j.at("unit"), index, n),
                            opt("euler_class"), opt("canonical_class"));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed model file: ") + e.what());
  } catch (const std::out_of_range&) {
    throw InvalidInput("model file refers to an unknown basis label");
  }
}

nlohmann::json model_to_json(const FrobeniusAlgebra& a) {
  nlohmann::json j;
  j["name"] = a.name();
  j["basis"] = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) j["basis"].push_back({{"label", a.labels()[i]}, {"degree", a.degree(i)}});
  j["products"] = nlohmann::json::array();
  for (std::size_t x = 0; x < a.dim(); ++x) {
    for (std::size_t y = x; y < a.dim(); ++y) {
      auto c = a.multiply(a.basis(x), a.basis(y));
      bool nonzero = false;
      for (const auto& v : c) nonzero = nonzero || v != 0;
      if (nonzero) j["products"].push_back({{"a", a.labels()[x]}, {"b", a.labels()[y]}, {"c", element_to_json(a, c)}});
    }
  }
  Element trace(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) trace[i] = a.integral(a.basis(i));
  j["trace"] = element_to_json(a, trace);
  j["unit"] = element_to_json(a, a.unit());
  if (a.euler_class()) j["euler_class"] = element_to_json(a, *a.euler_class());
  if (a.canonical_class()) j["canonical_class"] = element_to_json(a, *a.canonical_class());
  return j;
}

FrobeniusAlgebra load_model(const std::string& path_or_builtin) {
  const std::string prefix = "builtin:";
  if (path_or_builtin.rfind(prefix, 0) == 0) return builtin_model(path_or_builtin.substr(prefix.size()));
  std::ifstream in(path_or_builtin);
  if (!in) {
    try {
      return builtin_model(path_or_builtin);
    } catch (const InvalidInput&) {
      throw InvalidInput("cannot open model file '" + path_or_builtin + "'");
    }
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("model file is not valid JSON: ") + e.what());
  }
  return model_from_json(j);
}

}  // namespace wfk::fock
