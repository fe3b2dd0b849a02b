#include "rho/numeric_bridge.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rho/exact_core.hpp"
#include "rho/roman_harmonic.hpp"
#include "rho/stirling.hpp"

namespace rho {

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1]; node 0 plus symmetric pairs.
struct GK15Row {
  double node;
  double gauss_weight;
  double kronrod_weight;
};
constexpr GK15Row kGk15[8] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

struct Segment {
  double a, b, tol;
  int depth;
};

void gk15(const std::function<double(double)>& f, double a, double b, double& value,
          double& err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(mid);
  double gauss = kGk15[0].gauss_weight * f0;
  double kronrod = kGk15[0].kronrod_weight * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kGk15[i].node;
    const double fi = f(mid + dx) + f(mid - dx);
    gauss += kGk15[i].gauss_weight * fi;
    kronrod += kGk15[i].kronrod_weight * fi;
  }
  gauss *= half;
  kronrod *= half;
  value = kronrod;
  err = std::pow(200.0 * std::abs(gauss - kronrod), 1.5);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, long max_evals) {
  if (!(abs_tol > 0)) throw std::invalid_argument("integrate: abs_tol must be > 0");
  QuadratureResult out;
  std::vector<Segment> stack{{a, b, abs_tol, 0}};
  while (!stack.empty()) {
    const Segment seg = stack.back();
    stack.pop_back();
    double v = 0, e = 0;
    gk15(f, seg.a, seg.b, v, e);
    out.evaluations += 15;
    if (out.evaluations > max_evals)
      throw std::runtime_error("integrate: evaluation budget exceeded before reaching tolerance");
    if (e <= seg.tol || seg.depth >= 60) {
      out.value += v;
      out.est_error += e;
      continue;
    }
    const double mid = 0.5 * (seg.a + seg.b);
    stack.push_back({seg.a, mid, 0.5 * seg.tol, seg.depth + 1});
    stack.push_back({mid, seg.b, 0.5 * seg.tol, seg.depth + 1});
  }
  if (out.est_error > abs_tol)
    throw std::runtime_error("integrate: tolerance not reached");
  return out;
}

namespace {

// Smallest T >= lo with bound_coeff * 2 T^k e^(-rate T) below target.
double exp_tail_cutoff(double bound_coeff, long k, double rate, double target, double lo) {
  double T = lo;
  for (int i = 0; i < 400; ++i) {
    const double tail = 2.0 * bound_coeff * std::pow(T, static_cast<double>(k)) *
                        std::exp(-rate * T) / rate;
    if (tail < target && rate * T > 2.0 * static_cast<double>(k)) return T;
    T += 5.0;
  }
  return T;
}

}  // namespace

QuadratureResult quad_c(long n, long k, double tol) {
  if (n < 1) throw std::invalid_argument("quad_c: n must be >= 1");
  if (k < 0) throw std::invalid_argument("quad_c: k must be >= 0");
  if (!(tol > 0)) throw std::invalid_argument("quad_c: tol must be > 0");
  const double scale = static_cast<double>(n) / Rational(factorial(k)).to_double();
  const double T = exp_tail_cutoff(scale, k, 1.0, tol / 10.0, 30.0);
  const auto f = [n, k](double t) {
    return std::pow(1.0 - std::exp(-t), static_cast<double>(n - 1)) *
           std::pow(t, static_cast<double>(k)) * std::exp(-t);
  };
  QuadratureResult r = integrate(f, 0.0, T, 0.8 * tol / scale);
  r.value *= scale;
  r.est_error = r.est_error * scale + tol / 10.0;
  return r;
}

QuadratureResult distribution_moment(long D, long p, double tol) {
  if (D < 2) throw std::invalid_argument("distribution_moment: D must be >= 2");
  if (p < 0) throw std::invalid_argument("distribution_moment: p must be >= 0");
  if (!(tol > 0)) throw std::invalid_argument("distribution_moment: tol must be > 0");
  const double amp = 2.0 * static_cast<double>(D - 1);
  const double T = exp_tail_cutoff(amp, p, 2.0, tol / 10.0, 20.0);
  const auto f = [D, p, amp](double d) {
    return std::pow(d, static_cast<double>(p)) * amp * std::exp(-2.0 * d) *
           std::pow(1.0 - std::exp(-2.0 * d), static_cast<double>(D - 2));
  };
  QuadratureResult r = integrate(f, 0.0, T, 0.8 * tol);
  r.est_error += tol / 10.0;
  return r;
}

double c_approx(long n, long k) {
  if (n < 1) throw std::invalid_argument("c_approx: n must be >= 1");
  if (k < 0) throw std::invalid_argument("c_approx: k must be >= 0");
  std::vector<double> row(static_cast<std::size_t>(n) + 1, 1.0);
  row[0] = 1.0;
  for (long pass = 1; pass <= k; ++pass) {
    double acc = 0.0;
    for (long j = 1; j <= n; ++j) {
      acc += row[j] / static_cast<double>(j);
      row[j] = acc;
    }
    row[0] = 0.0;
  }
  return row[n];
}

double asymptotic_gap(long n, long k) {
  if (n < 1) throw std::invalid_argument("asymptotic_gap: n must be >= 1");
  if (k == 0) return 1.0;
  const double kfac = Rational(factorial(k)).to_double();
  return kfac * c_approx(n, k) / std::pow(std::log(static_cast<double>(n)), static_cast<double>(k));
}

double harmonic_gap(long n) {
  if (n < 1) throw std::invalid_argument("harmonic_gap: n must be >= 1");
  long double h = 0.0L;
  for (long j = n; j >= 1; --j) h += 1.0L / static_cast<long double>(j);
  return static_cast<double>(h - std::log(static_cast<long double>(n)));
}

PolylogNeg1 polylog_neg1(long s) {
  if (s < 1) throw std::invalid_argument("polylog_neg1: s must be >= 1");
  // Alternating-series acceleration (Cohen-Rodriguez Villegas-Zagier) of
  // eta(s) = sum (-1)^m / (m+1)^s; Li_s(-1) = -eta(s).
  const int n = 36;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0, csum = -d, acc = 0.0;
  for (int m = 0; m < n; ++m) {
    csum = b - csum;
    acc += csum / std::pow(static_cast<double>(m + 1), static_cast<double>(s));
    b = (m + n) * (m - n) * b / ((m + 0.5) * (m + 1.0));
  }
  PolylogNeg1 out;
  out.value = -acc / d;
  if (s % 2 == 0) {
    const long half = s / 2;
    const Integer two_pow = pow(Integer(2), static_cast<unsigned long>(s - 1));
    Rational q = Rational(two_pow - 1, factorial(s)) * bernoulli_number(s);
    if (half % 2 != 0) q = -q;
    out.pi_power_multiple = q;
  }
  return out;
}

double polylog_partial_sum(long k, PolylogSumVariant variant, long terms) {
  if (k < 0) throw std::invalid_argument("polylog_partial_sum: k must be >= 0");
  if (terms < 1) throw std::invalid_argument("polylog_partial_sum: terms must be >= 1");
  Rational acc(0);
  Rational two_pow(1);
  for (long n = 1; n <= terms; ++n) {
    two_pow *= Rational(2);
    Rational term = c(n, k) / two_pow;
    if (variant == PolylogSumVariant::over_n) term /= Rational(n);
    acc += term;
  }
  return acc.to_double();
}

double second_kind_partial(long n, long k, long terms) {
  if (n < 1) throw std::invalid_argument("second_kind_partial: n must be >= 1");
  if (k < 0 || terms < 1)
    throw std::invalid_argument("second_kind_partial: requires k >= 0 and terms >= 1");
  Rational acc(0);
  const Rational scale = Rational(factorial(n - 1)) / Rational(factorial(k));
  for (long i = 0; i < terms; ++i) {
    const long j = n - 1 + i;
    const Rational term =
        Rational(factorial(k + j), factorial(j)) /
        Rational(pow(Integer(n), static_cast<unsigned long>(k + j))) *
        Rational(stirling_second(j, n - 1));
    acc += term;
  }
  return (scale * acc).to_double();
}

std::pair<double, double> hyper_quad(long k, double z, double tol) {
  if (k < 0) throw std::invalid_argument("hyper_quad: k must be >= 0");
  if (!(tol > 0)) throw std::invalid_argument("hyper_quad: tol must be > 0");
  // Series side: sum_m z^m / ((m+1)^(k+1) m!).
  double lhs = 0.0, term = 1.0;
  for (long m = 0; m < 400; ++m) {
    if (m > 0) term *= z / static_cast<double>(m);
    const double add = term / std::pow(static_cast<double>(m + 1), static_cast<double>(k + 1));
    lhs += add;
    if (m > std::abs(z) + 8 && std::abs(add) < 1e-18 * (1.0 + std::abs(lhs))) break;
  }
  // Quadrature side after x = e^(-t).
  const double kfac = Rational(factorial(k)).to_double();
  const double amp = std::exp(std::abs(z)) / kfac;
  const double T = exp_tail_cutoff(amp, k, 1.0, tol / 10.0, 30.0 + std::abs(z));
  const auto f = [k, z](double t) {
    return std::pow(t, static_cast<double>(k)) * std::exp(-t) * std::exp(z * std::exp(-t));
  };
  const QuadratureResult r = integrate(f, 0.0, T, 0.8 * tol * kfac);
  return {lhs, r.value / kfac};
}

}  // namespace rho
