#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rho/exact_core.hpp"
#include "rho/roman_harmonic.hpp"

using rho::c;
using rho::c_binomial;
using rho::c_partition;
using rho::c_stirling;
using rho::harmonic;
using rho::HarmonicTable;
using rho::partitions;
using rho::Rational;
using rho::s_sum;
using rho::z_sum;

TEST_CASE("degree-zero and degree-one rows") {
  CHECK(c(0, 0) == Rational(1));
  CHECK(c(0, 1) == Rational(0));
  CHECK(c(0, 2) == Rational(0));
  CHECK(c(1, 7) == Rational(1));
  for (long k = 0; k <= 12; ++k) CHECK(c(1, k) == Rational(1));
}

TEST_CASE("frozen small values") {
  CHECK(c(-5, 1) == Rational(-1));
  CHECK(c(2, 2) == Rational(7, 4));
  CHECK(c(3, 2) == Rational(85, 36));
  CHECK(c(-3, 2) == Rational(-3, 2));
  CHECK(c(2, 5) == Rational(63, 32));
  CHECK(c(4, 1) == Rational(25, 12));
  CHECK_THROWS_AS(c(2, -1), std::invalid_argument);
}

TEST_CASE("order-zero column") {
  for (long n = 1; n <= 10; ++n) {
    CHECK(c(n, 0) == Rational(1));
    CHECK(c(-n, 0) == Rational(0));
  }
}

TEST_CASE("zero region for negative degrees") {
  for (long n = 0; n <= 10; ++n)
    for (long k = n + 1; k <= 14; ++k) CHECK(c(-n, k) == Rational(0));
}

TEST_CASE("binomial-sum path") {
  CHECK(c_binomial(3, 1) == Rational(11, 6));
  CHECK(c_binomial(2, 2) == Rational(7, 4));
  CHECK(c_binomial(1, 0) == Rational(1));
  CHECK_THROWS_AS(c_binomial(0, 1), std::invalid_argument);
}

TEST_CASE("stirling path") {
  CHECK(c_stirling(-1, 1) == Rational(-1));
  CHECK(c_stirling(-2, 2) == Rational(-1));
  CHECK(c_stirling(2, 2) == Rational(7, 4));
}

TEST_CASE("partition path") {
  CHECK(c_partition(4, 1) == harmonic(4, 1));
  CHECK(c_partition(4, 1) == Rational(25, 12));
  CHECK(c_partition(2, 5) == Rational(63, 32));
  for (long k = 0; k <= 6; ++k) CHECK(c_partition(1, k) == Rational(1));
  CHECK_THROWS_AS(c_partition(0, 1), std::invalid_argument);
}

TEST_CASE("partition enumeration") {
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(0)[0].empty());
  const auto p3 = partitions(3);
  REQUIRE(p3.size() == 3);
  CHECK((p3[0].size() == 1 && p3[0][0].length == 3 && p3[0][0].multiplicity == 1));
  CHECK((p3[1].size() == 2 && p3[1][0].length == 2 && p3[1][1].length == 1));
  CHECK((p3[2].size() == 1 && p3[2][0].length == 1 && p3[2][0].multiplicity == 3));
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(8).size() == 22);
  for (const auto& d : partitions(9)) {
    long total = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      total += d[i].length * d[i].multiplicity;
      if (i > 0) CHECK(d[i].length < d[i - 1].length);
    }
    CHECK(total == 9);
  }
  CHECK_THROWS_AS(partitions(-1), std::invalid_argument);
}

TEST_CASE("generalized harmonic numbers") {
  CHECK(harmonic(0, 1) == Rational(0));
  CHECK(harmonic(3, 1) == Rational(11, 6));
  CHECK(harmonic(2, 3) == Rational(9, 8));
  CHECK_THROWS_AS(harmonic(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(harmonic(3, 0), std::invalid_argument);
}

TEST_CASE("nested sum base cases") {
  CHECK(s_sum(5, {}, {}) == Rational(1));
  CHECK(s_sum(0, {}, {}) == Rational(0));
  CHECK(s_sum(-2, {}, {}) == Rational(0));
  CHECK(z_sum(0, {}, {}) == Rational(1));
  CHECK(z_sum(-1, {}, {}) == Rational(0));
}

TEST_CASE("nested sum evaluations") {
  const std::vector<long> w1{1};
  const std::vector<Rational> x1{Rational(1)};
  CHECK(s_sum(3, w1, x1) == Rational(11, 6));
  CHECK(z_sum(2, w1, x1) == Rational(3, 2));
  const std::vector<long> w2{1, 1};
  const std::vector<Rational> x2{Rational(1), Rational(1)};
  CHECK(s_sum(2, w2, x2) == Rational(7, 4));
  // depth-2 with a scale: S(3;2,1;1/2,1) enumerated by hand
  const std::vector<long> w3{2, 1};
  const std::vector<Rational> x3{Rational(1, 2), Rational(1)};
  Rational expected(0);
  for (long j = 1; j <= 3; ++j) {
    Rational inner(0);
    for (long i = 1; i <= j; ++i) inner += Rational(1) / Rational(i);
    expected += rho::pow(Rational(1, 2), j) / Rational(j * j) * inner;
  }
  CHECK(s_sum(3, w3, x3) == expected);
  CHECK_THROWS_AS(s_sum(3, w1, x2), std::invalid_argument);
  const std::vector<long> wbad{0};
  CHECK_THROWS_AS(z_sum(3, wbad, x1), std::invalid_argument);
}

TEST_CASE("all positive-degree paths agree") {
  for (long n = 1; n <= 10; ++n)
    for (long k = 0; k <= 5; ++k) {
      const Rational v = c(n, k);
      CHECK(v == c_binomial(n, k));
      CHECK(v == c_stirling(n, k));
      CHECK(v == c_partition(n, k));
      const std::vector<long> w(k, 1);
      const std::vector<Rational> x(k, Rational(1));
      CHECK(v == s_sum(n, w, x));
    }
}

TEST_CASE("negative-degree paths agree") {
  for (long n = 1; n <= 10; ++n)
    for (long k = 1; k <= 6; ++k) {
      const Rational v = c(-n, k);
      CHECK(v == c_stirling(-n, k));
      const std::vector<long> w(k - 1, 1);
      const std::vector<Rational> x(k - 1, Rational(1));
      CHECK(v == -z_sum(n - 1, w, x));
    }
}

TEST_CASE("order-step prefix identity") {
  for (long n = 1; n <= 12; ++n)
    for (long k = 1; k <= 5; ++k) {
      Rational acc(0);
      for (long j = 1; j <= n; ++j) acc += c(j, k - 1) / Rational(j);
      CHECK(c(n, k) == acc);
    }
}

TEST_CASE("descent identity for negative degrees") {
  for (long n = 1; n <= 10; ++n)
    for (long k = 1; k <= std::min<long>(n, 6); ++k) {
      Rational acc(0);
      for (long j = k; j <= n; ++j) acc += c(-j, k) / Rational(j);
      CHECK(c(-n - 1, k + 1) == acc);
    }
}

// The log-power integral collapses to a finite sum; after normalization it
// gives yet another closed form for positive degrees.
TEST_CASE("integral finite-sum equivalence") {
  for (long n = 1; n <= 12; ++n)
    for (long k = 0; k <= 6; ++k) {
      Rational acc(0);
      for (long j = 0; j <= n - 1; ++j) {
        const Rational term = Rational(rho::binomial(n - 1, j)) /
                              Rational(rho::pow(rho::Integer(j + 1), static_cast<unsigned long>(k + 1)));
        acc += j % 2 == 0 ? term : -term;
      }
      CHECK(c(n, k) == Rational(n) * acc);
    }
}

TEST_CASE("sign pattern") {
  for (long n = 1; n <= 12; ++n)
    for (long k = 0; k <= 6; ++k) {
      CHECK(c(n, k) > Rational(0));
      CHECK(c(-n, k) <= Rational(0));
    }
}

TEST_CASE("strictly increasing in order with finite limit") {
  for (long n = 2; n <= 6; ++n) {
    for (long k = 0; k < 30; ++k) CHECK(c(n, k) < c(n, k + 1));
    CHECK(c(n, 30) < Rational(n));
  }
}

TEST_CASE("fill order does not change values") {
  HarmonicTable by_row, scattered;
  std::vector<std::pair<long, long>> keys;
  for (long n = -8; n <= 8; ++n)
    for (long k = 0; k <= 6; ++k) keys.emplace_back(n, k);
  std::vector<Rational> expect;
  for (const auto& [n, k] : keys) expect.push_back(by_row.c(n, k));
  std::mt19937 rng(99);
  std::shuffle(keys.begin(), keys.end(), rng);
  for (const auto& [n, k] : keys) {
    const Rational v = scattered.c(n, k);
    const std::size_t idx = static_cast<std::size_t>((n + 8) * 7 + k);
    CHECK(v == expect[idx]);
  }
}

TEST_CASE("entry cap limits growth") {
  HarmonicTable table;
  table.set_entry_cap(10);
  CHECK_THROWS_AS(table.warm(0, 50, 10), std::length_error);
  table.set_entry_cap(0);
  CHECK(table.c(50, 10) == c(50, 10));
}

TEST_CASE("concurrent reads and fills stay consistent") {
  HarmonicTable shared;
  std::vector<std::thread> threads;
  std::vector<std::vector<Rational>> got(4);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([t, &shared, &got] {
      for (long n = -10; n <= 10; ++n)
        for (long k = 0; k <= 5; ++k)
          got[t].push_back(shared.c(t % 2 == 0 ? n : -n, k));
    });
  for (auto& th : threads) th.join();
  CHECK(got[0] == got[2]);
  CHECK(got[1] == got[3]);
  for (std::size_t i = 0; i < got[0].size(); ++i) {
    const long n = -10 + static_cast<long>(i / 6);
    const long k = static_cast<long>(i % 6);
    CHECK(got[0][i] == c(n, k));
  }
}
