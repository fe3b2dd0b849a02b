#include "rho/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "rho/exact_core.hpp"
#include "rho/roman_harmonic.hpp"

namespace rho {

long TruncatedSeries::check_order(long order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be >= 0");
  return order;
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, long order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(*this);
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const long n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (long i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const long n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (long i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const long n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (long i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (long j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& factor) const {
  TruncatedSeries r(*this);
  for (auto& x : r.coeffs_) x *= factor;
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0].is_zero())
    throw std::invalid_argument("TruncatedSeries::inverse: zero constant term");
  const long n = order();
  TruncatedSeries r(n);
  const Rational lead = Rational(1) / coeffs_[0];
  r.coeffs_[0] = lead;
  for (long m = 1; m <= n; ++m) {
    Rational acc(0);
    for (long i = 1; i <= m; ++i) acc += coeffs_[i] * r.coeffs_[m - i];
    r.coeffs_[m] = -lead * acc;
  }
  return r;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  if (!inner.coeffs_[0].is_zero())
    throw std::invalid_argument("TruncatedSeries::compose: inner constant term must be zero");
  const long n = std::min(order(), inner.order());
  TruncatedSeries in(std::vector<Rational>(inner.coeffs_.begin(), inner.coeffs_.begin() + n + 1));
  // Horner over truncated series.
  TruncatedSeries r = TruncatedSeries::constant(coeffs_[std::min(order(), n)], n);
  for (long m = std::min(order(), n) - 1; m >= 0; --m) {
    r = r * in;
    r.coeffs_[0] += coeffs_[m];
  }
  return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) return TruncatedSeries(0);
  TruncatedSeries r(order() - 1);
  for (long i = 1; i <= order(); ++i) r.coeffs_[i - 1] = Rational(i) * coeffs_[i];
  return r;
}

TruncatedSeries TruncatedSeries::shifted_up() const {
  TruncatedSeries r(order());
  for (long i = order(); i >= 1; --i) r.coeffs_[i] = coeffs_[i - 1];
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  const long n = std::min(a.order(), b.order());
  for (long i = 0; i <= n; ++i)
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  return true;
}

TruncatedSeries series_combine(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::sub: return a - b;
    case SeriesOp::mul: return a * b;
  }
  throw std::invalid_argument("series_combine: unknown op");
}

TruncatedSeries geometric_series(long order) {
  TruncatedSeries s(order);
  for (long m = 0; m <= order; ++m) s.at(m) = Rational(1);
  return s;
}

TruncatedSeries exp_series(long order) {
  TruncatedSeries s(order);
  Rational term(1);
  s.at(0) = term;
  for (long m = 1; m <= order; ++m) {
    term /= Rational(m);
    s.at(m) = term;
  }
  return s;
}

TruncatedSeries z_over_z_minus_one(long order) {
  TruncatedSeries s(order);
  for (long m = 1; m <= order; ++m) s.at(m) = Rational(-1);
  return s;
}

namespace {

// Valid for s >= 0; s = 0 is the geometric tail t/(1-t).
TruncatedSeries polylog_series_any(long s, long order) {
  TruncatedSeries out(order);
  for (long m = 1; m <= order; ++m)
    out.at(m) = Rational(1) / Rational(pow(Integer(m), static_cast<unsigned long>(s)));
  return out;
}

}  // namespace

TruncatedSeries polylog_series(long s, long order) {
  if (s < 1) throw std::invalid_argument("polylog_series: s must be >= 1");
  return polylog_series_any(s, order);
}

TruncatedSeries gf_order(long n, long order) {
  if (n < 1) throw std::invalid_argument("gf_order: n must be >= 1");
  TruncatedSeries out = TruncatedSeries::constant(Rational(1), order);
  for (long j = 1; j <= n; ++j) {
    TruncatedSeries factor = TruncatedSeries::constant(Rational(1), order);
    if (order >= 1) factor.at(1) = Rational(-1, j);
    out = out * factor.inverse();
  }
  return out;
}

TruncatedSeries gf_degree_egf(long k, long order) {
  if (k < 0) throw std::invalid_argument("gf_degree_egf: k must be >= 0");
  TruncatedSeries hyper(order);
  Rational inv_fact(1);
  for (long m = 0; m <= order; ++m) {
    if (m > 0) inv_fact /= Rational(m);
    const Rational mag =
        inv_fact / Rational(pow(Integer(m + 1), static_cast<unsigned long>(k + 1)));
    hyper.at(m) = m % 2 == 0 ? mag : -mag;
  }
  return (exp_series(order) * hyper).shifted_up();
}

TruncatedSeries gf_polylog_composed(long k, PolylogVariant variant, long order) {
  if (k < 0) throw std::invalid_argument("gf_polylog_composed: k must be >= 0");
  const TruncatedSeries inner = z_over_z_minus_one(order);
  if (variant == PolylogVariant::order_over_n)
    return -polylog_series_any(k + 1, order).compose(inner);
  // 1/(z-1) = -sum_m z^m
  return polylog_series_any(k, order).compose(inner) * (-geometric_series(order));
}

TruncatedSeries f_k_series(long k, long order) {
  if (k < 0) throw std::invalid_argument("f_k_series: k must be >= 0");
  TruncatedSeries out(order);
  Rational fact(1);
  for (long n = 0; n <= order; ++n) {
    if (n > 0) fact *= Rational(n);
    out.at(n) = c(n, k) / (fact * fact);
  }
  return out;
}

}  // namespace rho
