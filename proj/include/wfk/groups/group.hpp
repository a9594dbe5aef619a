#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wfk/exact/cyclotomic.hpp"

namespace wfk::groups {

using exact::CycNum;

struct Mat2 {
  CycNum a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  CycNum det() const { return a * d - b * c; }
  CycNum trace() const { return a + d; }
  Mat2 inverse() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y);
  // Canonical text after embedding every entry into ℚ(ζ_conductor).
  std::string key(int conductor) const;
};

// Group given by its multiplication table; elements are indices 0..order-1.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // Validates the table (identity, inverses, latin square, associativity).
  static FiniteGroup from_table(std::vector<std::uint32_t> mult, std::size_t order,
                                std::vector<std::string> labels = {},
                                std::optional<std::vector<Mat2>> matrices = std::nullopt);

  std::size_t order() const { return order_; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return mult_[x * order_ + y]; }
  std::uint32_t inv(std::uint32_t x) const { return inverse_[x]; }
  std::uint32_t identity() const { return identity_; }
  const std::vector<std::uint32_t>& table() const { return mult_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<std::vector<Mat2>>& matrices() const { return matrices_; }
  bool has_matrix_model() const { return matrices_.has_value(); }

  int element_order(std::uint32_t x) const;
  int exponent() const;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint32_t> mult_;
  std::vector<std::uint32_t> inverse_;
  std::uint32_t identity_ = 0;
  std::vector<std::string> labels_;
  std::optional<std::vector<Mat2>> matrices_;
};

// Breadth-first closure of the generated matrix group.
FiniteGroup build_from_generators(const std::vector<Mat2>& gens, std::size_t bound = 1000);

}  // namespace wfk::groups
