#include "rho/exact_core.hpp"

#include <stdexcept>

namespace rho {

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational roman_factorial(long n) {
  if (n >= 0) return Rational(factorial(n));
  const long m = -n - 1;  // >= 0
  const Rational sign = (n + 1) % 2 == 0 ? Rational(1) : Rational(-1);
  return sign / Rational(factorial(m));
}

Integer rising_factorial(const Integer& x, long n) {
  if (n < 0) throw std::invalid_argument("rising_factorial: n must be >= 0");
  Integer r(1);
  for (long i = 0; i < n; ++i) r *= x + i;
  return r;
}

Rational rising_factorial(const Rational& x, long n) {
  if (n < 0) throw std::invalid_argument("rising_factorial: n must be >= 0");
  Rational r(1);
  for (long i = 0; i < n; ++i) r *= x + Rational(i);
  return r;
}

}  // namespace rho
