#pragma once

#include <cstddef>
#include <shared_mutex>
#include <span>
#include <vector>

#include "rho/rational.hpp"

namespace rho {

// Memoized Roman harmonic numbers c_n^(k) for every integer degree n and
// order k >= 0, filled by the defining recurrence
//   n c_n^(k) = c_n^(k-1) + roman(n) c_{n-1}^(k),
// applied for increasing |n| (downward from 0 for negative degree).
// Same synchronization contract as StirlingTable.
class HarmonicTable {
 public:
  Rational c(long n, long k);
  void warm(long n_min, long n_max, long k_max);

  void set_entry_cap(std::size_t cap);
  std::size_t entries() const;
  void clear();

 private:
  void charge(std::size_t n);
  void ensure_pos(long n, long k);
  void ensure_neg(long m, long k);

  mutable std::shared_mutex mu_;
  std::vector<std::vector<Rational>> pos_;  // pos_[n][k], n >= 0
  std::vector<std::vector<Rational>> neg_;  // neg_[m-1][k] = c_{-m}^(k), m >= 1
  std::size_t cap_ = 0;
  std::size_t count_ = 0;
};

HarmonicTable& harmonic_table();

// c_n^(k) through the canonical recurrence path.
Rational c(long n, long k);

// Alternating binomial sum, n >= 1: sum_{j=1..n} (-1)^(j-1) C(n,j) / j^k.
Rational c_binomial(long n, long k);

// Stirling relation: (-1)^k roman_factorial(n) s(-n,k).
Rational c_stirling(long n, long k);

// Generalized harmonic number H_n^(k) = sum_{j=1..n} 1/j^k, n >= 0, k >= 1.
Rational harmonic(long n, long k);

// One decomposition of k as a sum of products multiplicity*length with
// pairwise distinct lengths (stored in decreasing length order).
struct PartitionPart {
  long length;
  long multiplicity;
};
using PartitionDecomposition = std::vector<PartitionPart>;

// Every multiset of positive integers summing to k, multiplicity form,
// deterministic order (largest-part-first lexicographic).
std::vector<PartitionDecomposition> partitions(long k);

// Sum over decompositions of k of prod_j (1/m_j!) (H_n^(l_j)/l_j)^(m_j), n >= 1.
Rational c_partition(long n, long k);

// Nested S-sum S(n; m_1..m_d; x_1..x_d); base S(n) = 1 for n > 0 else 0.
Rational s_sum(long n, std::span<const long> weights, std::span<const Rational> scales);

// Nested Z-sum Z(n; m_1..m_d; x_1..x_d); base Z(n) = 1 for n >= 0 else 0.
Rational z_sum(long n, std::span<const long> weights, std::span<const Rational> scales);

}  // namespace rho
