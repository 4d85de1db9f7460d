#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace twh {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" with q > 0 and gcd(p, q) = 1; integers print without "/1".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Rational parse_rational(const std::string& text);

Integer factorial(unsigned k);
Integer binomial(unsigned n, unsigned k);
Rational power_of_two(int exponent);

}  // namespace twh
