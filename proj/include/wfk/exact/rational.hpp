#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wfk::exact {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms; throws DivisionByZero when den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& r);

Integer factorial(long n);
Integer binomial(long n, long k);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace wfk::exact
