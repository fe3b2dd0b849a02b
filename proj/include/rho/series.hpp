#pragma once

#include <vector>

#include "rho/rational.hpp"

namespace rho {

// Formal power series over Rational, truncated at an explicit order N
// (coefficients 0..N, i.e. known mod z^(N+1)). Arithmetic carries the
// minimum of the operand orders; equality compares up to the common order.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1) {}
  explicit TruncatedSeries(long order) : coeffs_(check_order(order) + 1) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs);
  static TruncatedSeries constant(const Rational& value, long order);

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& operator[](long i) const { return coeffs_[i]; }
  Rational& at(long i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries scaled(const Rational& factor) const;

  // Multiplicative inverse mod z^(N+1); requires nonzero constant term.
  TruncatedSeries inverse() const;

  // Composition outer(inner); requires inner constant term zero.
  TruncatedSeries compose(const TruncatedSeries& inner) const;

  // Termwise derivative, order N-1 (a constant differentiates to the zero
  // series of order 0).
  TruncatedSeries derivative() const;

  // Multiplication by z keeping the order (top input coefficient drops out).
  TruncatedSeries shifted_up() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  static long check_order(long order);
  std::vector<Rational> coeffs_;
};

enum class SeriesOp { add, sub, mul };

TruncatedSeries series_combine(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);

// sum_{m=0..N} z^m.
TruncatedSeries geometric_series(long order);

// sum_{m=0..N} z^m / m!.
TruncatedSeries exp_series(long order);

// z/(z-1) = -sum_{m>=1} z^m.
TruncatedSeries z_over_z_minus_one(long order);

// Li_s truncated: sum_{m=1..N} t^m / m^s, s >= 1.
TruncatedSeries polylog_series(long s, long order);

// n!/(1-z)_n as a series in z; coefficient of z^k is c_n^(k). n >= 1.
TruncatedSeries gf_order(long n, long order);

// z e^z (k+1)F(k+1)(1..1;2..2;-z); coefficient of z^n is c_n^(k)/n!.
TruncatedSeries gf_degree_egf(long k, long order);

enum class PolylogVariant {
  order_over_n,  // -Li_{k+1}(z/(z-1)); coefficient of z^n is c_n^(k)/n
  plain,         // (1/(z-1)) Li_k(z/(z-1)); coefficient of z^n is c_n^(k)
};

TruncatedSeries gf_polylog_composed(long k, PolylogVariant variant, long order);

// sum_n c_n^(k) z^n / (n!)^2.
TruncatedSeries f_k_series(long k, long order);

}  // namespace rho
