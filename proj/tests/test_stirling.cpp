#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "rho/exact_core.hpp"
#include "rho/polynomial.hpp"
#include "rho/series.hpp"
#include "rho/stirling.hpp"

using rho::gen_bernoulli;
using rho::Integer;
using rho::Rational;
using rho::RationalPolynomial;
using rho::stirling_first;
using rho::stirling_second;
using rho::StirlingTable;

TEST_CASE("first kind base values") {
  CHECK(stirling_first(0, 0) == Rational(1));
  CHECK(stirling_first(0, 3) == Rational(0));
  CHECK(stirling_first(3, 2) == Rational(-3));
  CHECK(stirling_first(4, 2) == Rational(11));
  for (long k = 0; k <= 3; ++k)
    CHECK(stirling_first(-1, k) == (k % 2 == 0 ? Rational(1) : Rational(-1)));
  CHECK(stirling_first(-2, 0) == Rational(1, 2));
  CHECK(stirling_first(-2, 1) == Rational(-3, 4));
  CHECK(stirling_first(5, 7) == Rational(0));
  CHECK_THROWS_AS(stirling_first(2, -1), std::invalid_argument);
}

// x(x-1)...(x-n+1) expanded exactly carries s(n,k) as coefficients.
TEST_CASE("first kind against falling factorial expansion") {
  for (long n = 0; n <= 12; ++n) {
    RationalPolynomial falling(std::vector<Rational>{Rational(1)});
    for (long j = 0; j < n; ++j)
      falling = falling * RationalPolynomial(std::vector<Rational>{Rational(-j), Rational(1)});
    for (long k = 0; k <= n + 2; ++k) CHECK(falling.coeff(k) == stirling_first(n, k));
  }
}

// The inverse series of (x+1)_n carries s(-n,k).
TEST_CASE("negative first argument against series inversion") {
  for (long n = 1; n <= 8; ++n) {
    rho::TruncatedSeries prod = rho::TruncatedSeries::constant(Rational(1), 12);
    for (long j = 1; j <= n; ++j) {
      rho::TruncatedSeries factor = rho::TruncatedSeries::constant(Rational(j), 12);
      factor.at(1) = Rational(1);
      prod = prod * factor;
    }
    const rho::TruncatedSeries inv = prod.inverse();
    for (long k = 0; k <= 12; ++k) CHECK(inv[k] == stirling_first(-n, k));
  }
}

TEST_CASE("negative argument recurrence") {
  for (long n = 1; n <= 15; ++n)
    for (long k = 1; k <= 10; ++k)
      CHECK(Rational(n) * stirling_first(-n, k) + stirling_first(-n, k - 1) ==
            stirling_first(-n + 1, k));
}

TEST_CASE("row sums") {
  for (long n = 2; n <= 12; ++n) {
    Rational acc(0);
    for (long k = 0; k <= n; ++k) acc += stirling_first(n, k);
    CHECK(acc == Rational(0));
  }
  for (long n = 0; n <= 12; ++n) {
    Rational acc(0);
    for (long k = 0; k <= n; ++k) {
      const Rational t = stirling_first(n, k);
      acc += (n - k) % 2 == 0 ? t : -t;
    }
    CHECK(acc == Rational(rho::factorial(n)));
  }
}

namespace {

// Brute force: partitions of {0..n-1} into exactly k nonempty blocks.
long count_set_partitions(long n, long k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k <= 0 || k > n) return 0;
  std::vector<long> assign(n, 0);
  long count = 0;
  const auto valid = [&] {
    long blocks = 0;
    for (long i = 0; i < n; ++i) blocks = std::max(blocks, assign[i] + 1);
    if (blocks != k) return false;
    // canonical labeling: block labels appear in first-use order
    long seen = 0;
    for (long i = 0; i < n; ++i) {
      if (assign[i] > seen) return false;
      if (assign[i] == seen) ++seen;
    }
    return true;
  };
  while (true) {
    if (valid()) ++count;
    long i = n - 1;
    while (i >= 0 && assign[i] == k - 1) assign[i--] = 0;
    if (i < 0) break;
    ++assign[i];
  }
  return count;
}

}  // namespace

TEST_CASE("second kind values and enumeration oracle") {
  CHECK(stirling_second(0, 0) == 1);
  CHECK(stirling_second(4, 2) == 7);
  CHECK(stirling_second(3, 3) == 1);
  CHECK(stirling_second(5, 0) == 0);
  CHECK(stirling_second(3, 5) == 0);
  for (long n = 0; n <= 7; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(stirling_second(n, k) == count_set_partitions(n, k));
  CHECK_THROWS_AS(stirling_second(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(stirling_second(2, -1), std::invalid_argument);
}

TEST_CASE("generalized Bernoulli numbers") {
  CHECK(gen_bernoulli(3, 0) == Rational(1));
  CHECK(gen_bernoulli(2, 1) == Rational(-1));
  CHECK(gen_bernoulli(3, 2) == Rational(2));
  for (long m = 1; m <= 10; ++m) CHECK(gen_bernoulli(m, 0) == Rational(1));
  // B_1^(m) = -m/2
  for (long m = 2; m <= 10; ++m) CHECK(gen_bernoulli(m, 1) == Rational(-m, 2));
  CHECK_THROWS_AS(gen_bernoulli(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(gen_bernoulli(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_bernoulli(3, -1), std::invalid_argument);
}

TEST_CASE("classical Bernoulli numbers") {
  CHECK(rho::bernoulli_number(0) == Rational(1));
  CHECK(rho::bernoulli_number(1) == Rational(-1, 2));
  CHECK(rho::bernoulli_number(2) == Rational(1, 6));
  CHECK(rho::bernoulli_number(3) == Rational(0));
  CHECK(rho::bernoulli_number(4) == Rational(-1, 30));
  CHECK(rho::bernoulli_number(6) == Rational(1, 42));
  CHECK(rho::bernoulli_number(12) == Rational(-691, 2730));
}

TEST_CASE("table entry cap") {
  StirlingTable table;
  table.set_entry_cap(5);
  CHECK_THROWS_AS(table.first_kind(40, 3), std::length_error);
  table.set_entry_cap(0);
  CHECK(table.first_kind(40, 3) == stirling_first(40, 3));
}

TEST_CASE("fill order does not change values") {
  StirlingTable forward, backward;
  std::vector<Rational> a, b;
  for (long n = -6; n <= 6; ++n)
    for (long k = 0; k <= 6; ++k) a.push_back(forward.first_kind(n, k));
  for (long n = 6; n >= -6; --n)
    for (long k = 6; k >= 0; --k) b.push_back(backward.first_kind(n, k));
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i] == b[b.size() - 1 - i]);
}
