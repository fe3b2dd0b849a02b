#pragma once

#include <vector>

#include "rho/rational.hpp"

namespace rho {

// Dense univariate polynomial over Rational; trailing zero coefficients are
// trimmed so degree = coeffs.size() - 1 (the zero polynomial has degree 0).
class RationalPolynomial {
 public:
  RationalPolynomial() : coeffs_(1) {}
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& coeff(long i) const;  // 0 above the degree
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;
  RationalPolynomial derivative() const;
  RationalPolynomial derivative(long k) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  RationalPolynomial scaled(const Rational& factor) const;
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace rho
