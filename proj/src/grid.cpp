#include "rho/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rho/exact_core.hpp"
#include "rho/roman_harmonic.hpp"

namespace rho {

namespace {

void require_valid(const GridRange& range) {
  if (!range.valid()) throw std::invalid_argument("grid: empty range");
}

long thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Coefficients 0..k_max of prod_{j=1..n} (j - z); integer arithmetic.
std::vector<Integer> one_minus_z_pochhammer(long n, long k_max) {
  std::vector<Integer> p(k_max + 1, Integer(0));
  p[0] = Integer(1);
  for (long j = 1; j <= n; ++j) {
    for (long i = std::min(k_max, j); i >= 1; --i) p[i] = j * p[i] - p[i - 1];
    p[0] *= j;
  }
  return p;
}

// Seed row for degree n >= 1: series inverse of (1-z)_n scaled by n!.
void seed_row_positive(long n, long k_max, Rational* row) {
  const std::vector<Integer> p = one_minus_z_pochhammer(n, k_max);
  std::vector<Rational> b(k_max + 1);
  const Rational lead = Rational(Integer(1), p[0]);
  b[0] = lead;
  for (long m = 1; m <= k_max; ++m) {
    Rational acc(0);
    for (long i = 1; i <= m; ++i) acc += Rational(p[i]) * b[m - i];
    b[m] = -lead * acc;
  }
  const Rational nfac(factorial(n));
  for (long k = 0; k <= k_max; ++k) row[k] = nfac * b[k];
}

// Seed row for degree -m <= -1: (x)_m = -(m-1)! sum_l c_{-m}^(l) x^l, so the
// row is the rising-factorial expansion scaled by -1/(m-1)!.
void seed_row_negative(long m, long k_max, Rational* row) {
  const long top = std::min(m, k_max);
  std::vector<Integer> p(top + 1, Integer(0));
  p[0] = Integer(1);  // running product of (x + j), truncated
  for (long j = 0; j < m; ++j) {
    for (long i = top; i >= 1; --i) p[i] = j * p[i] + p[i - 1];
    p[0] *= j;
  }
  const Rational scale = Rational(-1) / Rational(factorial(m - 1));
  for (long k = 0; k <= k_max; ++k) row[k] = k <= top ? scale * Rational(p[k]) : Rational(0);
}

void fill_row_zero(long k_max, Rational* row) {
  row[0] = Rational(1);
  for (long k = 1; k <= k_max; ++k) row[k] = Rational(0);
}

// One contiguous degree block, seeded at `from`, stepping towards `to`
// (upwards for positive degrees, downwards for negative ones) with the
// defining recurrence.
void fill_block(const GridRange& range, long from, long to, std::vector<Rational>& out) {
  const long k_max = range.k_max;
  Rational* seed = out.data() + range.index(from, 0);
  if (from > 0)
    seed_row_positive(from, k_max, seed);
  else if (from == 0)
    fill_row_zero(k_max, seed);
  else
    seed_row_negative(-from, k_max, seed);
  if (from <= to) {
    for (long n = from + 1; n <= to; ++n) {
      const Rational* prev = out.data() + range.index(n - 1, 0);
      Rational* row = out.data() + range.index(n, 0);
      row[0] = Rational(1);
      for (long k = 1; k <= k_max; ++k)
        row[k] = (row[k - 1] + Rational(n) * prev[k]) / Rational(n);
    }
  } else {
    for (long d = from - 1; d >= to; --d) {
      const long n = d + 1;  // degree of the row above
      const Rational* prev = out.data() + range.index(n, 0);
      Rational* row = out.data() + range.index(d, 0);
      row[0] = Rational(0);
      for (long k = 1; k <= k_max; ++k)
        row[k] = (Rational(n) * prev[k] - prev[k - 1]) / Rational(roman(n));
    }
  }
}

}  // namespace

std::vector<Rational> c_grid_serial(const GridRange& range) {
  require_valid(range);
  HarmonicTable table;
  table.warm(range.n_min, range.n_max, range.k_max);
  std::vector<Rational> out(range.cells());
  for (long n = range.n_min; n <= range.n_max; ++n)
    for (long k = 0; k <= range.k_max; ++k) out[range.index(n, k)] = table.c(n, k);
  return out;
}

std::vector<Rational> c_grid_parallel(const GridRange& range) {
  require_valid(range);
  std::vector<Rational> out(range.cells());
  // Independent blocks per side: each seeds its boundary row from a closed
  // form, then the recurrence amortizes the rest of the block.
  struct Block {
    long from, to;
  };
  std::vector<Block> blocks;
  const long threads = std::max<long>(1, thread_count());
  const auto parts_for = [&](long rows) {
    const long min_len = std::max<long>(8, range.k_max);  // amortize the seed inversion
    return std::max<long>(1, std::min(threads, rows / min_len + 1));
  };
  // Row cost grows superlinearly with |n| (operand sizes); cube-law
  // boundaries keep per-block work roughly even.
  const auto split = [&](long lo, long hi, bool downward) {
    const long rows = hi - lo + 1;
    const long parts = std::min(parts_for(rows), rows);
    long prev = 0;
    for (long p = 1; p <= parts; ++p) {
      const double frac = std::cbrt(static_cast<double>(p) / static_cast<double>(parts));
      long cut = std::max(prev + 1, std::min(rows, static_cast<long>(frac * rows + 0.5)));
      if (p == parts) cut = rows;
      const long a = downward ? hi - cut + 1 : lo + prev;
      const long b = downward ? hi - prev : lo + cut - 1;
      if (downward)
        blocks.push_back({b, a});  // seed nearest zero, step down
      else
        blocks.push_back({a, b});
      prev = cut;
      if (prev >= rows) break;
    }
  };
  if (range.n_min <= -1) split(range.n_min, std::min<long>(-1, range.n_max), true);
  if (range.n_min <= 0 && range.n_max >= 0) blocks.push_back({0, 0});
  if (range.n_max >= 1) split(std::max<long>(1, range.n_min), range.n_max, false);

  const long count = static_cast<long>(blocks.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) fill_block(range, blocks[i].from, blocks[i].to, out);
  return out;
}

}  // namespace rho
