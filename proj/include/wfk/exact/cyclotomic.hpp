#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wfk/exact/rational.hpp"

namespace wfk::exact {

// Φ_n with integer coefficients, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(int n);

int euler_phi(int n);

// Precomputed data for ℚ(ζ_N): Φ_N and the reduced images of ζ^k for 0 ≤ k < 2N.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int conductor);

  int conductor() const { return n_; }
  int degree() const { return phi_; }
  const std::vector<Integer>& polynomial() const { return poly_; }
  const std::vector<Integer>& power(int k) const { return powers_[k]; }

  explicit CyclotomicField(int n);

 private:
  int n_;
  int phi_;
  std::vector<Integer> poly_;
  std::vector<std::vector<Integer>> powers_;
};

// Element of ℚ(ζ_N) in the power basis ζ^0 … ζ^{φ(N)-1}.
class CycNum {
 public:
  CycNum();
  CycNum(long v);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& v);  // NOLINT(google-explicit-constructor)
  CycNum(int conductor, std::vector<Rational> coeffs);

  // ζ_n^k.
  static CycNum root_of_unity(int n, long k = 1);

  int conductor() const { return field_->conductor(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws InvalidInput unless is_rational().
  Rational to_rational() const;

  CycNum embed(int conductor) const;
  CycNum conjugate() const;
  // Galois action ζ ↦ ζ^k, gcd(k, N) = 1.
  CycNum galois(long k) const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum inverse() const;

  // Human readable, e.g. "2 + 3*z12^2". Stable for fixed conductor.
  std::string to_string() const;

  // Total order on (conductor, coeffs); only meaningful for deterministic sorting.
  friend bool canonical_less(const CycNum& a, const CycNum& b);

 private:
  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> c_;

  void align(CycNum& other);
};

bool canonical_less(const CycNum& a, const CycNum& b);

int lcm_conductor(int a, int b);

}  // namespace wfk::exact
