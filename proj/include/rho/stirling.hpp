#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "rho/rational.hpp"

namespace rho {

// Memoized Stirling numbers: first kind s(n,k) for every integer n (rational
// valued when n < 0), second kind S(n,k) for n,k >= 0. Values never change
// once stored; fills are internally synchronized, lookups of already-stored
// entries take a shared lock.
class StirlingTable {
 public:
  Rational first_kind(long n, long k);
  Integer second_kind(long n, long k);

  // Maximum number of stored entries; 0 means unlimited. Exceeding the cap
  // throws std::length_error.
  void set_entry_cap(std::size_t cap);
  std::size_t entries() const;
  void clear();

 private:
  void charge(std::size_t n);
  void ensure_pos(long n);
  void ensure_neg(long m, long k);
  void ensure_second(long n);

  mutable std::shared_mutex mu_;
  std::vector<std::vector<Integer>> first_pos_;   // row n: s(n,0..n)
  std::vector<std::vector<Rational>> first_neg_;  // row m: s(-m,0..), m >= 1
  std::vector<std::vector<Integer>> second_;      // row n: S(n,0..n)
  std::size_t cap_ = 0;
  std::size_t count_ = 0;
};

StirlingTable& stirling_table();

// s(n,k): coefficient of x^k in the expansion of Gamma(x+1)/Gamma(x+1-n).
Rational stirling_first(long n, long k);

// S(n,k): partitions of an n-set into k blocks.
Integer stirling_second(long n, long k);

// Generalized Bernoulli number B_j^(m), 1 <= m, 0 <= j <= m-1.
Rational gen_bernoulli(long order, long index);

// Classical Bernoulli number B_j (B_1 = -1/2 convention).
Rational bernoulli_number(long j);

}  // namespace rho
