#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "rho/rational.hpp"

namespace rho {

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;
  long evaluations = 0;
};

// Adaptive Gauss-Kronrod (7,15) bisection with an absolute error target.
// Throws std::runtime_error if the target is not reached within the
// evaluation budget.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, long max_evals = 4000000);

// c_n^(k) by quadrature of (-1)^k (n/k!) int_0^1 x^(n-1) ln(1-x)^k dx after
// the substitution x = 1 - e^(-t) (smooth, exponentially decaying integrand).
QuadratureResult quad_c(long n, long k, double tol);

// p-th moment of the distribution 2(D-1) e^(-2d) (1-e^(-2d))^(D-2) on
// [0,inf); equals (p!/2^p) c_{D-1}^(p).
QuadratureResult distribution_moment(long D, long p, double tol);

// Positive-degree c_n^(k) in double precision (prefix-sum recurrence); for
// large n where exact tables would be wasteful.
double c_approx(long n, long k);

// k! c_n^(k) / (ln n)^k; tends to 1 as n grows.
double asymptotic_gap(long n, long k);

// H_n - ln n; tends to the Euler-Mascheroni constant.
double harmonic_gap(long n);

struct PolylogNeg1 {
  double value = 0.0;
  // For even s: exact q with Li_s(-1) = q pi^s.
  std::optional<Rational> pi_power_multiple;
};

// Li_s(-1) by accelerated alternating summation, s >= 1.
PolylogNeg1 polylog_neg1(long s);

enum class PolylogSumVariant {
  over_n,  // sum_n c_n^(k) / (2^n n)   -> -Li_{k+1}(-1)
  plain,   // sum_n c_n^(k) / 2^n       -> -2 Li_k(-1)
};

// Partial sum with `terms` terms, starting at n = 1.
double polylog_partial_sum(long k, PolylogSumVariant variant, long terms);

// Partial sum of the expansion of c_n^(k) over second-kind Stirling numbers:
// ((n-1)!/k!) sum_{j=n-1..} ((k+j)!/(j! n^(k+j))) S(j,n-1), `terms` summands.
double second_kind_partial(long n, long k, long terms);

// Truncated series vs quadrature for
// (k+1)F(k+1)(1..1;2..2|z) = (1/k!) int_0^1 e^(zx) (-ln x)^k dx.
std::pair<double, double> hyper_quad(long k, double z, double tol);

}  // namespace rho
