#include <doctest.h>

#include <random>

#include "wfk/errors.hpp"
#include "wfk/exact/cyclotomic.hpp"
#include "wfk/exact/json.hpp"
#include "wfk/exact/linalg.hpp"

using namespace wfk::exact;

namespace {

CycNum z(int n, long k = 1) { return CycNum::root_of_unity(n, k); }

CycNum random_cyc(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c(euler_phi(n));
  for (auto& x : c) x = make_rational(coef(rng), den(rng));
  return CycNum(n, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  // Φ_6 = x² − x + 1, and Φ_p has all ones.
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic_polynomial(7) == std::vector<Integer>(7, 1));
}

TEST_CASE("small identities") {
  CHECK(z(4) * z(4) == CycNum(-1));
  CHECK(z(3) + z(3, 2) == CycNum(-1));
  CHECK((z(5) + z(5, 4)) * (z(5, 2) + z(5, 3)) == CycNum(-1));
  CHECK(z(4).conjugate() == -z(4));
  CHECK(CycNum(1).conjugate() == CycNum(1));
  CHECK((z(3) + CycNum(2)).conjugate() == z(3, 2) + CycNum(2));
  // ζ_2 = −1 and ζ_6² = ζ_3 across conductors.
  CHECK(z(2) == CycNum(-1));
  CHECK(z(6, 2) == z(3));
  CHECK(z(4) * z(3) == z(12, 7));
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(CycNum(1) / CycNum(0), wfk::DivisionByZero);
  CHECK_THROWS_AS(make_rational(1, 0), wfk::DivisionByZero);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> cond(1, 24);
  for (int t = 0; t < 60; ++t) {
    CycNum a = random_cyc(rng, cond(rng));
    CycNum b = random_cyc(rng, cond(rng));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(a.conjugate().conjugate() == a);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
  }
}

TEST_CASE("rationals round-trip through conductor one") {
  Rational r = make_rational(-7, 3);
  CycNum c(r);
  CHECK(c.conductor() == 1);
  CHECK(c.to_rational() == r);
  CHECK(c.embed(12).to_rational() == r);
}

TEST_CASE("json encoding") {
  CycNum v = z(12) * CycNum(make_rational(3, 5)) + CycNum(2);
  auto j = cycnum_to_json(v);
  CHECK(j["conductor"] == 12);
  CHECK(j["coeffs"][0] == nlohmann::json::array({"2", "1"}));
  CHECK(j["coeffs"][1] == nlohmann::json::array({"3", "5"}));
  CHECK(cycnum_from_json(j) == v);
}

TEST_CASE("exact linear algebra") {
  Matrix<Rational> m(3, 3);
  int vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  CHECK(determinant(m) == 18);
  CHECK(m * inverse(m) == Matrix<Rational>::identity(3));
  Matrix<Rational> s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK(rank(s) == 1);
  CHECK(kernel(s).size() == 1);
  CHECK_THROWS_AS(inverse(s), wfk::NonInvertibleMatrix);
}
