#include "twh/rational.hpp"

#include "twh/error.hpp"

namespace twh {

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational value;
  if (text.empty() || value.set_str(text, 10) != 0 || value.get_den() == 0) {
    throw Error(ErrorKind::InvalidInput, "not a rational number: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

Integer factorial(unsigned k) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), k);
  return result;
}

Integer binomial(unsigned n, unsigned k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Rational power_of_two(int exponent) {
  Integer p = 1;
  unsigned magnitude = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), magnitude);
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace twh
