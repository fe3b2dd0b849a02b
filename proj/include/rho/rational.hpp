#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rho {

using Integer = mpz_class;

// Exact rational number. Always kept in canonical form: denominator > 0 and
// gcd(|numerator|, denominator) = 1, so structural equality is value equality.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(int n) : q_(n) {}   // NOLINT
  Rational(const Integer& n) : q_(n) {}  // NOLINT
  Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-q_), raw_tag{}); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  // Lowest terms, "p/q" with "/1" omitted.
  std::string str() const {
    std::string s = q_.get_num().get_str();
    if (q_.get_den() != 1) {
      s += '/';
      s += q_.get_den().get_str();
    }
    return s;
  }

  // Accepts "p" and "p/q" (optional leading sign on p). Rejects anything else.
  static Rational parse(std::string_view s);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  struct raw_tag {};
  Rational(mpq_class q, raw_tag) : q_(std::move(q)) {}
  mpq_class q_;
};

inline Rational Rational::parse(std::string_view s) {
  const auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'"); };
  std::size_t i = 0;
  const auto digits = [&](bool allow_sign) {
    std::size_t start = i;
    if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t first_digit = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == first_digit) bad();
    return std::string(s.substr(start, i - start));
  };
  if (s.empty()) bad();
  std::string num = digits(true);
  if (num[0] == '+') num.erase(0, 1);  // mpz_set_str rejects a leading '+'
  std::string den = "1";
  if (i < s.size()) {
    if (s[i] != '/') bad();
    ++i;
    den = digits(false);
    if (i != s.size()) bad();
  }
  Integer d(den);
  if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
  return Rational(Integer(num), d);
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// b^e for integer e; e < 0 inverts (throws on 0^negative).
inline Rational pow(const Rational& b, long e) {
  if (e < 0) {
    if (b.is_zero()) throw std::domain_error("pow: zero base with negative exponent");
    return Rational(1) / pow(b, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), b.numerator().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), b.denominator().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

inline Integer pow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace rho
