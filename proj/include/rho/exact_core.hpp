#pragma once

#include "rho/rational.hpp"

namespace rho {

// Roman n: n for n != 0, 1 for n = 0.
inline long roman(long n) { return n == 0 ? 1 : n; }

Integer factorial(long n);

// C(n,k) for n >= 0; 0 when k < 0 or k > n.
Integer binomial(long n, long k);

// n! for n >= 0, (-1)^(n+1)/(-n-1)! for n < 0.
Rational roman_factorial(long n);

// Rising factorial (x)_n = x(x+1)...(x+n-1); (x)_0 = 1.
Integer rising_factorial(const Integer& x, long n);
Rational rising_factorial(const Rational& x, long n);

}  // namespace rho
