#pragma once

#include <cstddef>
#include <vector>

#include "rho/rational.hpp"

namespace rho {

// Rectangular block of Roman harmonic numbers: degrees n_min..n_max, orders
// 0..k_max, row-major with k contiguous.
struct GridRange {
  long n_min = 0;
  long n_max = 0;
  long k_max = 0;

  bool valid() const { return n_min <= n_max && k_max >= 0; }
  std::size_t rows() const { return static_cast<std::size_t>(n_max - n_min + 1); }
  std::size_t cols() const { return static_cast<std::size_t>(k_max + 1); }
  std::size_t cells() const { return rows() * cols(); }
  std::size_t index(long n, long k) const {
    return static_cast<std::size_t>(n - n_min) * cols() + static_cast<std::size_t>(k);
  }
};

// Serial reference: the memoized defining recurrence, one fresh table.
std::vector<Rational> c_grid_serial(const GridRange& range);

// OpenMP kernel: rows are independent tasks. Positive degrees go through the
// alternating binomial sum per cell, negative degrees through one rising
// factorial expansion per row; no shared state.
std::vector<Rational> c_grid_parallel(const GridRange& range);

}  // namespace rho
