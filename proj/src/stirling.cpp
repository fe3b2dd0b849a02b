#include "rho/stirling.hpp"

#include <mutex>
#include <stdexcept>

#include "rho/exact_core.hpp"

namespace rho {

void StirlingTable::set_entry_cap(std::size_t cap) {
  std::unique_lock lock(mu_);
  cap_ = cap;
}

std::size_t StirlingTable::entries() const {
  std::shared_lock lock(mu_);
  return count_;
}

void StirlingTable::clear() {
  std::unique_lock lock(mu_);
  first_pos_.clear();
  first_neg_.clear();
  second_.clear();
  count_ = 0;
}

void StirlingTable::charge(std::size_t n) {
  if (cap_ != 0 && count_ + n > cap_)
    throw std::length_error("StirlingTable: memo entry cap exceeded");
  count_ += n;
}

// s(n+1,k) = s(n,k-1) - n*s(n,k), s(0,k) = delta_{k,0}.
void StirlingTable::ensure_pos(long n) {
  if (first_pos_.empty()) {
    charge(1);
    first_pos_.push_back({Integer(1)});
  }
  while (static_cast<long>(first_pos_.size()) <= n) {
    const long r = static_cast<long>(first_pos_.size());
    const auto& prev = first_pos_[r - 1];
    charge(static_cast<std::size_t>(r) + 1);
    std::vector<Integer> row(r + 1);
    for (long k = 0; k <= r; ++k) {
      Integer v = k > 0 ? prev[k - 1] : Integer(0);
      if (k < r) v -= (r - 1) * prev[k];
      row[k] = v;
    }
    first_pos_.push_back(std::move(row));
  }
}

// s(-m,k) = (s(-m+1,k) - s(-m,k-1)) / m, s(-m,0) = 1/m!.
void StirlingTable::ensure_neg(long m, long k) {
  for (long r = 1; r <= m; ++r) {
    if (static_cast<long>(first_neg_.size()) < r) first_neg_.emplace_back();
    auto& row = first_neg_[r - 1];
    if (row.empty()) {
      charge(1);
      row.push_back(Rational(1) / Rational(factorial(r)));
    }
    while (static_cast<long>(row.size()) <= k) {
      const long col = static_cast<long>(row.size());
      Rational above;  // s(-r+1, col)
      if (r == 1) {
        above = col == 0 ? Rational(1) : Rational(0);
      } else {
        above = first_neg_[r - 2][col];
      }
      charge(1);
      row.push_back((above - row[col - 1]) / Rational(r));
    }
  }
}

// S(n+1,k) = k*S(n,k) + S(n,k-1), S(0,k) = delta_{k,0}.
void StirlingTable::ensure_second(long n) {
  if (second_.empty()) {
    charge(1);
    second_.push_back({Integer(1)});
  }
  while (static_cast<long>(second_.size()) <= n) {
    const long r = static_cast<long>(second_.size());
    const auto& prev = second_[r - 1];
    charge(static_cast<std::size_t>(r) + 1);
    std::vector<Integer> row(r + 1);
    for (long k = 0; k <= r; ++k) {
      Integer v = k > 0 ? prev[k - 1] : Integer(0);
      if (k < r) v += k * prev[k];
      row[k] = v;
    }
    second_.push_back(std::move(row));
  }
}

Rational StirlingTable::first_kind(long n, long k) {
  if (k < 0) throw std::invalid_argument("stirling_first: k must be >= 0");
  if (n >= 0) {
    if (k > n) return Rational(0);
    {
      std::shared_lock lock(mu_);
      if (static_cast<long>(first_pos_.size()) > n) return Rational(first_pos_[n][k]);
    }
    std::unique_lock lock(mu_);
    ensure_pos(n);
    return Rational(first_pos_[n][k]);
  }
  const long m = -n;
  {
    std::shared_lock lock(mu_);
    if (static_cast<long>(first_neg_.size()) >= m &&
        static_cast<long>(first_neg_[m - 1].size()) > k)
      return first_neg_[m - 1][k];
  }
  std::unique_lock lock(mu_);
  ensure_neg(m, k);
  return first_neg_[m - 1][k];
}

Integer StirlingTable::second_kind(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling_second: n,k must be >= 0");
  if (k > n) return Integer(0);
  {
    std::shared_lock lock(mu_);
    if (static_cast<long>(second_.size()) > n) return second_[n][k];
  }
  std::unique_lock lock(mu_);
  ensure_second(n);
  return second_[n][k];
}

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

Rational stirling_first(long n, long k) { return stirling_table().first_kind(n, k); }

Integer stirling_second(long n, long k) { return stirling_table().second_kind(n, k); }

Rational gen_bernoulli(long order, long index) {
  if (order < 1) throw std::invalid_argument("gen_bernoulli: order must be >= 1");
  if (index < 0 || index >= order)
    throw std::invalid_argument("gen_bernoulli: index must satisfy 0 <= index <= order-1");
  return stirling_first(order, order - index) / Rational(binomial(order - 1, order - index - 1));
}

Rational bernoulli_number(long j) {
  if (j < 0) throw std::invalid_argument("bernoulli_number: j must be >= 0");
  std::vector<Rational> b(j + 1);
  b[0] = Rational(1);
  for (long m = 1; m <= j; ++m) {
    Rational acc(0);
    for (long i = 0; i < m; ++i) acc += Rational(binomial(m + 1, i)) * b[i];
    b[m] = -acc / Rational(m + 1);
  }
  return b[j];
}

}  // namespace rho
