#include "rho/polynomial.hpp"

#include <stdexcept>

namespace rho {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back();
  trim();
}

void RationalPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& RationalPolynomial::coeff(long i) const {
  static const Rational zero(0);
  if (i < 0) throw std::invalid_argument("RationalPolynomial::coeff: negative index");
  return i <= degree() ? coeffs_[i] : zero;
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (long i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (degree() == 0) return RationalPolynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (long i = 1; i <= degree(); ++i) d[i - 1] = Rational(i) * coeffs_[i];
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::derivative(long k) const {
  if (k < 0) throw std::invalid_argument("RationalPolynomial::derivative: k must be >= 0");
  RationalPolynomial p = *this;
  for (long i = 0; i < k; ++i) p = p.derivative();
  return p;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> s(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i < a.coeffs_.size()) s[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) s[i] += b.coeffs_[i];
  }
  return RationalPolynomial(std::move(s));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> p(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(p));
}

RationalPolynomial RationalPolynomial::scaled(const Rational& factor) const {
  std::vector<Rational> s(coeffs_);
  for (auto& x : s) x *= factor;
  return RationalPolynomial(std::move(s));
}

}  // namespace rho
