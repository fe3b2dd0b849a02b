#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "rho/exact_core.hpp"

using rho::binomial;
using rho::factorial;
using rho::Integer;
using rho::Rational;
using rho::roman;
using rho::roman_factorial;

TEST_CASE("roman number") {
  CHECK(roman(5) == 5);
  CHECK(roman(0) == 1);
  CHECK(roman(-3) == -3);
}

TEST_CASE("roman factorial values") {
  CHECK(roman_factorial(4) == Rational(24));
  CHECK(roman_factorial(0) == Rational(1));
  CHECK(roman_factorial(-1) == Rational(1));
  CHECK(roman_factorial(-3) == Rational(1, 2));
  CHECK(roman_factorial(-4) == Rational(-1, 6));
}

TEST_CASE("roman factorial recurrence") {
  for (long n = -20; n <= 20; ++n)
    CHECK(roman_factorial(n) == Rational(roman(n)) * roman_factorial(n - 1));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(6) == 720);
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("binomial values and out-of-range convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-2, 1), std::invalid_argument);
}

TEST_CASE("binomial equals factorial ratio") {
  for (long n = 0; n <= 30; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(Rational(binomial(n, k)) ==
            Rational(factorial(n)) / Rational(factorial(k) * factorial(n - k)));
}

TEST_CASE("rising factorial") {
  CHECK(rho::rising_factorial(Integer(3), 0) == 1);
  CHECK(rho::rising_factorial(Integer(2), 3) == 24);  // 2*3*4
  CHECK(rho::rising_factorial(Integer(-3), 2) == 6);  // (-3)(-2)
  CHECK(rho::rising_factorial(Rational(1, 2), 2) == Rational(3, 4));
}

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7).str() == "0");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational printing and parsing") {
  CHECK(Rational(85, 36).str() == "85/36");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational::parse("85/36") == Rational(85, 36));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("+12") == Rational(12));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  for (const char* bad : {"", "a", "1/0", "1.5", "1 /2", "1/-2", "3/", "/4"})
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("rational arithmetic properties") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 23);
  for (int i = 0; i < 200; ++i) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    const Rational c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
  }
}

TEST_CASE("rational division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(rho::pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("rational pow") {
  CHECK(rho::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rho::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(rho::pow(Rational(5), 0) == Rational(1));
}
