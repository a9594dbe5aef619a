#include "wfk/exact/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "wfk/errors.hpp"

namespace wfk::exact {

namespace {

using Poly = std::vector<Integer>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor; the remainder must vanish.
Poly divide_exact(const Poly& num, const Poly& den) {
  Poly rem = num;
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(rem.size()) - 1;
  Poly q(std::max(nn - dn + 1, 1), 0);
  for (int i = nn - dn; i >= 0; --i) {
    Integer coef = rem[i + dn];
    q[i] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= dn; ++j) rem[i + j] -= coef * den[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw DiagonalizationFailure("cyclotomic division left a remainder");
  }
  trim(q);
  return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidInput("cyclotomic_polynomial needs n >= 1");
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  }
  return p;
}

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

CyclotomicField::CyclotomicField(int n) : n_(n), phi_(euler_phi(n)), poly_(cyclotomic_polynomial(n)) {
  powers_.reserve(2 * n);
  Poly cur(phi_, 0);
  cur[0] = 1;
  for (int k = 0; k < 2 * n; ++k) {
    powers_.push_back(cur);
    // multiply by x and reduce with the monic Φ_N
    Poly next(phi_, 0);
    Integer top = cur[phi_ - 1];
    for (int i = phi_ - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi_; ++i) next[i] -= top * poly_[i];
    }
    cur = std::move(next);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int conductor) {
  if (conductor < 1) throw InvalidInput("conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const CyclotomicField>(conductor);
  cache.emplace(conductor, f);
  return f;
}

CycNum::CycNum() : field_(CyclotomicField::get(1)), c_(1) {}
CycNum::CycNum(long v) : field_(CyclotomicField::get(1)), c_{Rational(v)} {}
CycNum::CycNum(const Rational& v) : field_(CyclotomicField::get(1)), c_{v} { c_[0].canonicalize(); }

CycNum::CycNum(int conductor, std::vector<Rational> coeffs)
    : field_(CyclotomicField::get(conductor)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != field_->degree()) {
    throw InvalidInput("coefficient vector length must equal phi(conductor)");
  }
  for (auto& x : c_) x.canonicalize();
}

CycNum CycNum::root_of_unity(int n, long k) {
  auto f = CyclotomicField::get(n);
  long r = ((k % n) + n) % n;
  const auto& p = f->power(static_cast<int>(r));
  std::vector<Rational> c(p.begin(), p.end());
  return CycNum(n, std::move(c));
}

bool CycNum::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

Rational CycNum::to_rational() const {
  if (!is_rational()) throw InvalidInput("cyclotomic number is not rational: " + to_string());
  return c_[0];
}

CycNum CycNum::embed(int conductor) const {
  int n = this->conductor();
  if (conductor == n) return *this;
  if (conductor % n != 0) throw InvalidInput("embedding needs a multiple of the conductor");
  auto target = CyclotomicField::get(conductor);
  int step = conductor / n;
  std::vector<Rational> out(target->degree());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& p = target->power(static_cast<int>(i) * step);
    for (int j = 0; j < target->degree(); ++j) {
      if (p[j] != 0) out[j] += c_[i] * p[j];
    }
  }
  CycNum r;
  r.field_ = target;
  r.c_ = std::move(out);
  return r;
}

CycNum CycNum::galois(long k) const {
  int n = conductor();
  long kk = ((k % n) + n) % n;
  if (std::gcd(kk, static_cast<long>(n)) != 1) throw InvalidInput("galois exponent not coprime");
  std::vector<Rational> out(field_->degree());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& p = field_->power(static_cast<int>((kk * static_cast<long>(i)) % n));
    for (int j = 0; j < field_->degree(); ++j) {
      if (p[j] != 0) out[j] += c_[i] * p[j];
    }
  }
  CycNum r;
  r.field_ = field_;
  r.c_ = std::move(out);
  return r;
}

CycNum CycNum::conjugate() const { return galois(-1); }

void CycNum::align(CycNum& other) {
  int a = conductor();
  int b = other.conductor();
  if (a == b) return;
  int l = lcm_conductor(a, b);
  if (a != l) *this = embed(l);
  if (b != l) other = other.embed(l);
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.conductor() == conductor()) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  if (o.conductor() == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  CycNum b = o;
  align(b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.conductor() == 1) {
    const Rational s = o.c_[0];
    for (auto& x : c_) x *= s;
    return *this;
  }
  if (conductor() == 1) {
    const Rational s = c_[0];
    CycNum r = o;
    for (auto& x : r.c_) x *= s;
    *this = std::move(r);
    return *this;
  }
  CycNum b = o;
  align(b);
  int d = field_->degree();
  std::vector<Rational> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b.c_[j] != 0) prod[i + j] += c_[i] * b.c_[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + d);
  for (int k = d; k < 2 * d - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& p = field_->power(k);
    for (int j = 0; j < d; ++j) {
      if (p[j] != 0) out[j] += prod[k] * p[j];
    }
  }
  c_ = std::move(out);
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  if (conductor() == 1) return CycNum(Rational(1) / c_[0]);
  int d = field_->degree();
  // Column j of the multiplication matrix is (*this) * ζ^j; solve M x = e_0.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (int j = 0; j < d; ++j) {
    CycNum col = *this * root_of_unity(conductor(), j);
    for (int i = 0; i < d; ++i) m[i][j] = col.c_[i];
  }
  m[0][d] = 1;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) throw DivisionByZero("singular multiplication matrix");
    std::swap(m[piv], m[col]);
    Rational inv = Rational(1) / m[col][col];
    for (int j = col; j <= d; ++j) m[col][j] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = col; j <= d; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::vector<Rational> x(d);
  for (int i = 0; i < d; ++i) x[i] = m[i][d];
  return CycNum(conductor(), std::move(x));
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor() == b.conductor()) return a.c_ == b.c_;
  CycNum x = a;
  CycNum y = b;
  x.align(y);
  return x.c_ == y.c_;
}

bool canonical_less(const CycNum& a, const CycNum& b) {
  CycNum x = a;
  CycNum y = b;
  x.align(y);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] != y.c_[i]) return x.c_[i] < y.c_[i];
  }
  return false;
}

std::string CycNum::to_string() const {
  if (is_rational()) return exact::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (!first) {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    } else if (v < 0 && i > 0) {
      os << "-";
      v = -v;
    }
    first = false;
    if (i == 0) {
      os << exact::to_string(v);
      continue;
    }
    if (v != 1) os << exact::to_string(v) << "*";
    os << "z" << conductor();
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace wfk::exact
