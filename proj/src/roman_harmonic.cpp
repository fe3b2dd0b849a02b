#include "rho/roman_harmonic.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "rho/exact_core.hpp"
#include "rho/stirling.hpp"

namespace rho {

void HarmonicTable::set_entry_cap(std::size_t cap) {
  std::unique_lock lock(mu_);
  cap_ = cap;
}

std::size_t HarmonicTable::entries() const {
  std::shared_lock lock(mu_);
  return count_;
}

void HarmonicTable::clear() {
  std::unique_lock lock(mu_);
  pos_.clear();
  neg_.clear();
  count_ = 0;
}

void HarmonicTable::charge(std::size_t n) {
  if (cap_ != 0 && count_ + n > cap_)
    throw std::length_error("HarmonicTable: memo entry cap exceeded");
  count_ += n;
}

// c_n^(k) = (c_n^(k-1) + n c_{n-1}^(k)) / n, row n filled left to right.
void HarmonicTable::ensure_pos(long n, long k) {
  for (long r = 0; r <= n; ++r) {
    if (static_cast<long>(pos_.size()) <= r) pos_.emplace_back();
    auto& row = pos_[r];
    if (row.empty()) {
      charge(1);
      row.push_back(Rational(1));  // c_r^(0) = 1 for r >= 0
    }
    while (static_cast<long>(row.size()) <= k) {
      const long col = static_cast<long>(row.size());
      charge(1);
      if (r == 0) {
        row.push_back(Rational(0));  // c_0^(k) = delta_{k,0}
      } else {
        row.push_back((row[col - 1] + Rational(r) * pos_[r - 1][col]) / Rational(r));
      }
    }
  }
}

// c_{-m}^(k) = ((-m+1) c_{-m+1}^(k) - c_{-m+1}^(k-1)) / roman(-m+1).
void HarmonicTable::ensure_neg(long m, long k) {
  ensure_pos(0, k);  // degree-0 row feeds the first negative row
  for (long r = 1; r <= m; ++r) {
    if (static_cast<long>(neg_.size()) < r) neg_.emplace_back();
    auto& row = neg_[r - 1];
    if (row.empty()) {
      charge(1);
      row.push_back(Rational(0));  // c_n^(0) = 0 for n < 0
    }
    while (static_cast<long>(row.size()) <= k) {
      const long col = static_cast<long>(row.size());
      const auto up = [&](long j) -> const Rational& {
        return r == 1 ? pos_[0][j] : neg_[r - 2][j];
      };
      charge(1);
      const long d = -r + 1;  // degree of the row above
      row.push_back((Rational(d) * up(col) - up(col - 1)) / Rational(roman(d)));
    }
  }
}

Rational HarmonicTable::c(long n, long k) {
  if (k < 0) throw std::invalid_argument("c: k must be >= 0");
  if (n >= 0) {
    {
      std::shared_lock lock(mu_);
      if (static_cast<long>(pos_.size()) > n && static_cast<long>(pos_[n].size()) > k)
        return pos_[n][k];
    }
    std::unique_lock lock(mu_);
    ensure_pos(n, k);
    return pos_[n][k];
  }
  const long m = -n;
  if (k > m) return Rational(0);  // c_{-m}^(k) = 0 for k > m
  {
    std::shared_lock lock(mu_);
    if (static_cast<long>(neg_.size()) >= m && static_cast<long>(neg_[m - 1].size()) > k)
      return neg_[m - 1][k];
  }
  std::unique_lock lock(mu_);
  ensure_neg(m, k);
  return neg_[m - 1][k];
}

void HarmonicTable::warm(long n_min, long n_max, long k_max) {
  if (k_max < 0) return;
  std::unique_lock lock(mu_);
  if (n_max >= 0) ensure_pos(n_max, k_max);
  if (n_min < 0) ensure_neg(-n_min, std::min(k_max, -n_min));
}

HarmonicTable& harmonic_table() {
  static HarmonicTable table;
  return table;
}

Rational c(long n, long k) { return harmonic_table().c(n, k); }

Rational c_binomial(long n, long k) {
  if (n < 1) throw std::invalid_argument("c_binomial: n must be >= 1");
  if (k < 0) throw std::invalid_argument("c_binomial: k must be >= 0");
  Rational acc(0);
  for (long j = 1; j <= n; ++j) {
    const Rational term = Rational(binomial(n, j)) / Rational(pow(Integer(j), static_cast<unsigned long>(k)));
    acc += (j % 2 == 1) ? term : -term;
  }
  return acc;
}

Rational c_stirling(long n, long k) {
  if (k < 0) throw std::invalid_argument("c_stirling: k must be >= 0");
  const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
  return sign * roman_factorial(n) * stirling_first(-n, k);
}

Rational harmonic(long n, long k) {
  if (n < 0) throw std::invalid_argument("harmonic: n must be >= 0");
  if (k < 1) throw std::invalid_argument("harmonic: k must be >= 1");
  Rational acc(0);
  for (long j = 1; j <= n; ++j)
    acc += Rational(1) / Rational(pow(Integer(j), static_cast<unsigned long>(k)));
  return acc;
}

namespace {

void emit_partitions(long remaining, long max_part, std::vector<long>& parts,
                     std::vector<PartitionDecomposition>& out) {
  if (remaining == 0) {
    PartitionDecomposition d;
    for (long p : parts) {
      if (!d.empty() && d.back().length == p)
        ++d.back().multiplicity;
      else
        d.push_back({p, 1});
    }
    out.push_back(std::move(d));
    return;
  }
  for (long p = std::min(remaining, max_part); p >= 1; --p) {
    parts.push_back(p);
    emit_partitions(remaining - p, p, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<PartitionDecomposition> partitions(long k) {
  if (k < 0) throw std::invalid_argument("partitions: k must be >= 0");
  std::vector<PartitionDecomposition> out;
  std::vector<long> parts;
  emit_partitions(k, k == 0 ? 1 : k, parts, out);
  return out;
}

Rational c_partition(long n, long k) {
  if (n < 1) throw std::invalid_argument("c_partition: n must be >= 1");
  if (k < 0) throw std::invalid_argument("c_partition: k must be >= 0");
  Rational acc(0);
  for (const auto& decomposition : partitions(k)) {
    Rational prod(1);
    for (const auto& [length, multiplicity] : decomposition) {
      const Rational base = harmonic(n, length) / Rational(length);
      prod *= pow(base, multiplicity) / Rational(factorial(multiplicity));
    }
    acc += prod;
  }
  return acc;
}

namespace {

// Bottom-up evaluation over depth levels; values[j] holds the sum for upper
// argument j after processing the current level.
Rational nested_sum(long n, std::span<const long> weights, std::span<const Rational> scales,
                    bool z_style) {
  if (weights.size() != scales.size())
    throw std::invalid_argument("nested sum: weights/scales length mismatch");
  for (long w : weights)
    if (w < 1) throw std::invalid_argument("nested sum: weights must be positive");
  const auto base = [&](long j) -> Rational {
    if (z_style) return j >= 0 ? Rational(1) : Rational(0);
    return j > 0 ? Rational(1) : Rational(0);
  };
  if (weights.empty()) return base(n);
  if (n < 1) return Rational(0);
  const long depth = static_cast<long>(weights.size());
  // values over j = 0..n for level `level`
  std::vector<Rational> values(n + 1);
  for (long level = depth - 1; level >= 0; --level) {
    std::vector<Rational> next(n + 1, Rational(0));
    Rational acc(0);
    for (long j = 1; j <= n; ++j) {
      const long inner_arg = z_style ? j - 1 : j;
      Rational inner;
      if (level == depth - 1) {
        inner = base(inner_arg);
      } else {
        inner = inner_arg >= 0 && inner_arg <= n ? values[inner_arg] : Rational(0);
      }
      acc += pow(scales[level], j) / Rational(pow(Integer(j), static_cast<unsigned long>(weights[level]))) * inner;
      next[j] = acc;
    }
    values = std::move(next);
  }
  return values[n];
}

}  // namespace

Rational s_sum(long n, std::span<const long> weights, std::span<const Rational> scales) {
  return nested_sum(n, weights, scales, false);
}

Rational z_sum(long n, std::span<const long> weights, std::span<const Rational> scales) {
  return nested_sum(n, weights, scales, true);
}

}  // namespace rho
