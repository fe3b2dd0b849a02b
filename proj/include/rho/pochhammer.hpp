#pragma once

#include "rho/polynomial.hpp"
#include "rho/rational.hpp"
#include "rho/series.hpp"

namespace rho {

// (x)_n as an exact polynomial in x; n = 0 gives the constant 1.
RationalPolynomial pochhammer_poly(long n);

// d^k/dx^k (x)_n at x, expressed through negative-degree Roman harmonic
// numbers scaled by (x)_j/j!; returns 0 for k > n, the symbol itself for
// k = 0.
Rational pochhammer_deriv(long n, long k, const Rational& x);

// Same derivative through the coefficient form: the expansion of (x)_n has
// coefficients -(n-1)! c_{-n}^(l), differentiated termwise.
Rational pochhammer_deriv_coeff_form(long n, long k, const Rational& x);

// d^k/dx^k (x)_n at an integer point, dispatching on the closed form for
// x = 0, x = 1, x = N > 1, x = -N with N >= n, and x = -N with n > N > 0.
Rational pochhammer_deriv_at_int(long n, long k, long N);

// d^k/dx^k 1/(x)_n via the partial fraction decomposition; throws
// std::domain_error when x is one of the poles 0, -1, ..., -(n-1).
Rational recip_deriv(long n, long k, const Rational& x);

// Closed forms of the reciprocal derivative at integer points (x = 1,
// x = N > 1, x = -N with N >= n); pole error for 0 >= N > -n.
Rational recip_deriv_at_int(long n, long k, long N);

// Regular part of 1/(x)_n near 0: series with coefficients
// (-1)^j c_{n-1}^(j) / (n-1)!; the caller supplies the 1/x prefactor.
TruncatedSeries recip_series(long n, long order);

// Leibniz test: sum_j C(k,j) (d^(k-j)(x)_n)(d^j 1/(x)_n) - delta_{k,0};
// contract value 0.
Rational product_identity_residual(long n, long k, const Rational& x);

}  // namespace rho
