#include "rho/pochhammer.hpp"

#include <stdexcept>

#include "rho/exact_core.hpp"
#include "rho/roman_harmonic.hpp"

namespace rho {

namespace {

void require_positive_n(long n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

void require_nonneg_k(long k, const char* who) {
  if (k < 0) throw std::invalid_argument(std::string(who) + ": k must be >= 0");
}

bool on_pole(long n, const Rational& x) {
  if (!x.is_integer()) return false;
  const Integer v = x.numerator();
  return v <= 0 && v > -n;
}

void require_off_pole(long n, const Rational& x, const char* who) {
  if (on_pole(n, x))
    throw std::domain_error(std::string(who) + ": pole at x = " + x.str() +
                            " (1/(x)_n has poles at 0, -1, ..., -(n-1))");
}

}  // namespace

RationalPolynomial pochhammer_poly(long n) {
  if (n < 0) throw std::invalid_argument("pochhammer_poly: n must be >= 0");
  RationalPolynomial p(std::vector<Rational>{Rational(1)});
  for (long j = 0; j < n; ++j)
    p = p * RationalPolynomial(std::vector<Rational>{Rational(j), Rational(1)});
  return p;
}

Rational pochhammer_deriv(long n, long k, const Rational& x) {
  require_positive_n(n, "pochhammer_deriv");
  require_nonneg_k(k, "pochhammer_deriv");
  if (k > n) return Rational(0);
  if (k == 0) return rising_factorial(x, n);
  const Rational scale = Rational(factorial(n)) * Rational(factorial(k));
  Rational acc(0);
  Rational rising(1);  // (x)_j / j!
  for (long j = 0; j <= n - k; ++j) {
    if (j > 0) rising *= (x + Rational(j - 1)) / Rational(j);
    acc += c(-n + j, k) / Rational(-n + j) * rising;
  }
  return scale * acc;
}

Rational pochhammer_deriv_coeff_form(long n, long k, const Rational& x) {
  require_positive_n(n, "pochhammer_deriv_coeff_form");
  require_nonneg_k(k, "pochhammer_deriv_coeff_form");
  if (k > n) return Rational(0);
  Rational acc(0);
  for (long j = 0; j <= n - k; ++j)
    acc += Rational(rising_factorial(Integer(j + 1), k)) * c(-n, k + j) * pow(x, j);
  return -Rational(factorial(n - 1)) * acc;
}

Rational pochhammer_deriv_at_int(long n, long k, long N) {
  require_positive_n(n, "pochhammer_deriv_at_int");
  require_nonneg_k(k, "pochhammer_deriv_at_int");
  if (k > n) return Rational(0);
  const Rational kfac(factorial(k));
  if (N == 0) return -Rational(factorial(n - 1)) * kfac * c(-n, k);
  if (N == 1) return -Rational(factorial(n)) * kfac * c(-n - 1, k + 1);
  if (N > 1) {
    Rational acc(0);
    for (long j = 0; j <= k; ++j) {
      const Rational term = c(-n - N, k + 1 - j) * c(N - 1, j);
      acc += j % 2 == 0 ? -term : term;
    }
    return kfac * Rational(rising_factorial(Integer(N), n)) * acc;
  }
  const long M = -N;
  if (M >= n) {
    Rational acc(0);
    for (long j = 0; j <= k; ++j) {
      const Rational term = c(-M - 1, k + 1 - j) * c(M - n, j);
      acc += j % 2 == 0 ? -term : term;
    }
    const Rational sign = (n - k) % 2 == 0 ? Rational(1) : Rational(-1);
    return sign * kfac * Rational(rising_factorial(Integer(M - n + 1), n)) * acc;
  }
  // n > M > 0
  Rational acc(0);
  for (long j = 0; j <= k; ++j) {
    const Rational term = c(-M - 1, k - j + 1) * c(-n + M, j);
    acc += j % 2 == 0 ? term : -term;
  }
  const Rational sign = (M - k) % 2 == 0 ? Rational(1) : Rational(-1);
  return sign * kfac * Rational(factorial(M)) * Rational(factorial(n - M - 1)) * acc;
}

Rational recip_deriv(long n, long k, const Rational& x) {
  require_positive_n(n, "recip_deriv");
  require_nonneg_k(k, "recip_deriv");
  require_off_pole(n, x, "recip_deriv");
  Rational acc(0);
  for (long j = 0; j <= n - 1; ++j) {
    const Rational term = Rational(binomial(n - 1, j)) / pow(x + Rational(j), k + 1);
    acc += j % 2 == 0 ? term : -term;
  }
  const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
  return sign * Rational(factorial(k)) / Rational(factorial(n - 1)) * acc;
}

Rational recip_deriv_at_int(long n, long k, long N) {
  require_positive_n(n, "recip_deriv_at_int");
  require_nonneg_k(k, "recip_deriv_at_int");
  if (N <= 0 && N > -n)
    throw std::domain_error("recip_deriv_at_int: pole at x = " + std::to_string(N));
  const Rational kfac(factorial(k));
  if (N == 1) {
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    return sign * kfac / Rational(factorial(n)) * c(n, k);
  }
  if (N > 1) {
    Rational acc(0);
    for (long j = 0; j <= k; ++j) {
      const Rational term = c(-N, k + 1 - j) * c(n + N - 1, j);
      acc += j % 2 == 0 ? -term : term;
    }
    return kfac / Rational(rising_factorial(Integer(N), n)) * acc;
  }
  const long M = -N;  // M >= n
  Rational acc(0);
  for (long j = 0; j <= k; ++j) {
    const Rational term = c(-M + n - 1, k + 1 - j) * c(M, j);
    acc += j % 2 == 0 ? -term : term;
  }
  const Rational sign = (n - k) % 2 == 0 ? Rational(1) : Rational(-1);
  return sign * kfac / Rational(rising_factorial(Integer(M - n + 1), n)) * acc;
}

TruncatedSeries recip_series(long n, long order) {
  require_positive_n(n, "recip_series");
  TruncatedSeries out(order);
  const Rational scale = Rational(1) / Rational(factorial(n - 1));
  for (long j = 0; j <= order; ++j) {
    const Rational v = scale * c(n - 1, j);
    out.at(j) = j % 2 == 0 ? v : -v;
  }
  return out;
}

Rational product_identity_residual(long n, long k, const Rational& x) {
  require_positive_n(n, "product_identity_residual");
  require_nonneg_k(k, "product_identity_residual");
  require_off_pole(n, x, "product_identity_residual");
  Rational acc(0);
  for (long j = 0; j <= k; ++j)
    acc += Rational(binomial(k, j)) * pochhammer_deriv(n, k - j, x) * recip_deriv(n, j, x);
  return acc - (k == 0 ? Rational(1) : Rational(0));
}

}  // namespace rho
