#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wfk/exact/cyclotomic.hpp"

namespace wfk::fock {

using exact::CycNum;

// Colour set of a Fock space; odd colours obey the exterior law.
struct FockSpace {
  std::vector<std::string> labels;
  std::vector<bool> odd;
  std::size_t size() const { return labels.size(); }
};
using SpaceHandle = std::shared_ptr<const FockSpace>;
SpaceHandle make_space(std::vector<std::string> labels, std::vector<bool> odd);

// Creation generator a_n(c), n ≥ 1.
struct Generator {
  int mode;
  int color;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// Sorted list of generators (with repetition for even colours).
using Monomial = std::vector<Generator>;
int weight(const Monomial& m);

class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(SpaceHandle s) : space_(std::move(s)) {}
  static FockVector vacuum(SpaceHandle s);
  static FockVector monomial(SpaceHandle s, const Monomial& m, const CycNum& coef = CycNum(1));

  const SpaceHandle& space() const { return space_; }
  const std::map<Monomial, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CycNum coefficient(const Monomial& m) const;
  // Highest weight present, -1 for the zero vector.
  int max_weight() const;
  // Projection to a single weight.
  FockVector weight_part(int w) const;

  void add(const Monomial& m, const CycNum& c);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const CycNum& s, const FockVector& v);
  // Product in the (super)symmetric algebra.
  friend FockVector operator*(const FockVector& a, const FockVector& b);
  friend bool operator==(const FockVector& a, const FockVector& b);

  std::string to_string() const;

 private:
  SpaceHandle space_;
  std::map<Monomial, CycNum> terms_;
};

// Left multiplication of a monomial by one generator; the sign comes from the exterior law.
// Returns 0 when an odd generator would repeat.
int insert_generator(const SpaceHandle& s, const Monomial& m, Generator g, Monomial& out);

// A single mode operator: creation of Σ_c coef_c a_n(c), or the annihilation (super-)derivation
// with D(a_n(c)) = weight_c.
struct ModeOp {
  enum Kind { creation, annihilation } kind;
  int mode;
  bool odd;
  std::vector<CycNum> values;
  int shift() const { return kind == creation ? mode : -mode; }
};

FockVector apply(const ModeOp& op, const FockVector& v);

// Normal-ordered product: coef · ops[0] ops[1] ⋯ (rightmost acts first).
struct Term {
  CycNum coef;
  std::vector<ModeOp> ops;
  bool odd() const;
};

// Finite sum of normal-ordered terms with a common weight shift. max_input_weight bounds the
// inputs on which the truncated sum is exact; applying past it raises CutoffTooSmall.
class FockOperator {
 public:
  FockOperator(SpaceHandle s, int shift, std::optional<int> max_input_weight = std::nullopt);
  static FockOperator single(SpaceHandle s, const ModeOp& op);

  const SpaceHandle& space() const { return space_; }
  int shift() const { return shift_; }
  const std::optional<int>& max_input_weight() const { return max_input_; }
  const std::vector<Term>& terms() const { return terms_; }
  void add_term(Term t);

  FockVector apply(const FockVector& v) const;

  FockOperator& operator+=(const FockOperator& o);
  friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
  friend FockOperator operator-(FockOperator a, const FockOperator& b);
  friend FockOperator operator*(const CycNum& s, FockOperator a);

 private:
  SpaceHandle space_;
  int shift_;
  std::optional<int> max_input_;
  std::vector<Term> terms_;
};

// Supercommutator [A, B] v, term by term with parity signs.
FockVector supercommutator(const FockOperator& a, const FockOperator& b, const FockVector& v);

// Field Σ_{n≠0} X_n z^{n-1}: X_n (n > 0) creates Σ create_c a_n(c); X_{-n} is the
// derivation with D(a_n(c)) = n · annihilate_c.
struct Field {
  bool odd = false;
  std::vector<CycNum> create;
  std::vector<CycNum> annihilate;
  ModeOp mode(int n) const;
};

// Coefficient of z^{total_mode - k} in :f_1(z) ⋯ f_k(z):, nested right to left; creation parts go
// left, annihilation parts right with the parity sign of the fields they pass.
FockOperator normal_ordered_product(const SpaceHandle& s, const std::vector<Field>& fields, int total_mode,
                                    int max_input_weight);

std::vector<Monomial> monomials_of_weight(const FockSpace& s, int w);
std::vector<long> graded_dimension(const FockSpace& s, int cutoff);
std::vector<long> graded_dimension(int even_colors, int odd_colors, int cutoff);

}  // namespace wfk::fock
