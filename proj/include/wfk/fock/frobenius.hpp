#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wfk/exact/linalg.hpp"
#include "wfk/exact/rational.hpp"

namespace wfk::fock {

using exact::Rational;
using Element = std::vector<Rational>;

// Finite-dimensional graded-commutative algebra with a trace, standing in for H*(X).
class FrobeniusAlgebra {
 public:
  FrobeniusAlgebra(std::string name, std::vector<std::string> labels, std::vector<int> degrees,
                   std::vector<std::vector<Element>> mult, Element trace, Element unit,
                   std::optional<Element> euler_class = std::nullopt,
                   std::optional<Element> canonical_class = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  int degree(std::size_t i) const { return degrees_[i]; }
  bool odd(std::size_t i) const { return degrees_[i] % 2 != 0; }
  const Element& unit() const { return unit_; }
  const std::optional<Element>& euler_class() const { return euler_; }
  const std::optional<Element>& canonical_class() const { return canonical_; }

  Element basis(std::size_t i) const;
  Element zero() const { return Element(dim()); }
  Element multiply(const Element& x, const Element& y) const;
  Rational integral(const Element& x) const;
  // True if x is homogeneous of odd parity; throws InvalidInput for mixed parity.
  bool parity_of(const Element& x) const;

  exact::Matrix<Rational> pairing_matrix() const;
  bool nondegenerate() const;
  // d_j with ∫(e_i d_j) = δ_ij. Throws DegeneratePairing.
  std::vector<Element> dual_basis() const;

  FrobeniusAlgebra with_canonical_class(std::optional<Element> k) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::vector<std::vector<Element>> mult_;
  Element trace_;
  Element unit_;
  std::optional<Element> euler_;
  std::optional<Element> canonical_;
  void validate() const;
};

Element operator+(const Element& a, const Element& b);
Element operator*(const Rational& s, const Element& a);

// Built-in models: "point", "p2", "affine-plane", "abelian-surface", "p1xp1".
FrobeniusAlgebra builtin_model(const std::string& name);
FrobeniusAlgebra model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const FrobeniusAlgebra& a);
FrobeniusAlgebra load_model(const std::string& path_or_builtin);

}  // namespace wfk::fock
