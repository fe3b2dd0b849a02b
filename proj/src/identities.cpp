#include "rho/identities.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "rho/exact_core.hpp"
#include "rho/roman_harmonic.hpp"
#include "rho/stirling.hpp"

namespace rho {

RationalSequence binomial_transform(const RationalSequence& a) {
  RationalSequence b(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rational acc(0);
    for (std::size_t l = 0; l <= n; ++l) {
      const Rational term = Rational(binomial(static_cast<long>(n), static_cast<long>(l))) * a[l];
      acc += l % 2 == 0 ? term : -term;
    }
    b[n] = acc;
  }
  return b;
}

Rational difference_apply(const RationalSequence& samples, long n) {
  if (n < 0) throw std::invalid_argument("difference_apply: n must be >= 0");
  if (static_cast<long>(samples.size()) < n + 1)
    throw std::invalid_argument("difference_apply: needs at least n+1 samples");
  Rational acc(0);
  for (long j = 0; j <= n; ++j) {
    const Rational term = Rational(binomial(n, j)) * samples[j];
    acc += (n - j) % 2 == 0 ? term : -term;
  }
  return acc;
}

Rational bell_partial(BellKind kind, long k, long j, const RationalSequence& args) {
  if (j < 1 || j > k) throw std::invalid_argument("bell_partial: requires 1 <= j <= k");
  if (static_cast<long>(args.size()) < k - j + 1)
    throw std::invalid_argument("bell_partial: needs at least k-j+1 arguments");
  // dp[kk][jj], built by the one-step recurrence on the first part; only
  // states with kk - jj <= k - j can contribute, which also keeps every
  // argument index within the supplied k-j+1 values.
  std::vector<std::vector<Rational>> dp(k + 1, std::vector<Rational>(j + 1, Rational(0)));
  dp[0][0] = Rational(1);
  for (long kk = 1; kk <= k; ++kk) {
    for (long jj = std::max<long>(1, kk - (k - j)); jj <= std::min(j, kk); ++jj) {
      Rational acc(0);
      for (long i = 1; i <= kk - jj + 1; ++i) {
        Rational weight(1);
        if (kind == BellKind::exponential) weight = Rational(binomial(kk - 1, i - 1));
        acc += weight * args[i - 1] * dp[kk - i][jj - 1];
      }
      dp[kk][jj] = acc;
    }
  }
  return dp[k][j];
}

namespace {

Rational kronecker(long a, long b) { return a == b ? Rational(1) : Rational(0); }

Rational sign_of(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

long get_param(const std::map<std::string, long>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("sum_rule_residual: missing parameter '" + key + "'");
  return it->second;
}

// sum_k c_n^(k) z^k evaluated through the closed form n!/(1-z)_n.
Rational order_sum_closed_form(long n, const Rational& z) {
  return Rational(factorial(n)) / rising_factorial(Rational(1) - z, n);
}

Rational rule_alternating_negative_degree(long n) {
  if (n < 2) throw std::invalid_argument("alternating_negative_degree: n must be >= 2");
  Rational acc(0);
  for (long k = 1; k <= n; ++k) acc += sign_of(k) * c(-n, k);
  return acc;
}

Rational rule_negative_degree_total(long n) {
  if (n < 0) throw std::invalid_argument("negative_degree_total: n must be >= 0");
  Rational acc(0);
  for (long k = 1; k <= n; ++k) acc += c(-n, k);
  return acc + Rational(n);
}

Rational rule_abel_alternating(long n) {
  if (n < 0) throw std::invalid_argument("abel_alternating: n must be >= 0");
  return order_sum_closed_form(n, Rational(-1)) - Rational(1, n + 1);
}

Rational rule_binomial_weighted(long n, long k) {
  if (n < 1) throw std::invalid_argument("binomial_weighted: n must be >= 1");
  Rational acc(0);
  for (long j = 1; j <= n; ++j)
    acc += sign_of(j - 1) * Rational(binomial(n, j)) * c(j, k);
  return acc - Rational(1) / Rational(pow(Integer(n), static_cast<unsigned long>(k)));
}

Rational rule_half_point(long n) {
  const Rational lhs = order_sum_closed_form(n, Rational(1, 2));
  const Integer f = factorial(n);
  return lhs - Rational(pow(Integer(2), static_cast<unsigned long>(2 * n)) * f * f,
                        factorial(2 * n));
}

Rational rule_minus_half_point(long n) {
  const Rational lhs = order_sum_closed_form(n, Rational(-1, 2));
  const Integer f = factorial(n);
  return lhs - Rational(pow(Integer(2), static_cast<unsigned long>(2 * n)) * f * f,
                        factorial(2 * n + 1));
}

Rational rule_half_point_even(long n) {
  const Rational a = order_sum_closed_form(n, Rational(1, 2));
  const Rational b = order_sum_closed_form(n, Rational(-1, 2));
  const Rational rhs = Rational(pow(Integer(2), static_cast<unsigned long>(2 * n)) *
                                    factorial(n) * factorial(n + 1),
                                factorial(2 * n + 1));
  return (a + b) / Rational(2) - rhs;
}

Rational rule_half_point_odd(long n) {
  const Rational a = order_sum_closed_form(n, Rational(1, 2));
  const Rational b = order_sum_closed_form(n, Rational(-1, 2));
  const Integer f = factorial(n);
  const Rational rhs =
      Rational(pow(Integer(2), static_cast<unsigned long>(2 * n)) * n * f * f, factorial(2 * n + 1));
  return (a - b) / Rational(2) - rhs;
}

Rational rule_stirling_orthogonality(long n, long k) {
  if (n < 0) throw std::invalid_argument("stirling_orthogonality: n must be >= 0");
  Rational acc(0);
  for (long j = 0; j <= k; ++j)
    acc += sign_of(j) * stirling_first(n + 1, k + 1 - j) * stirling_first(-n, j);
  return acc - sign_of(n) * kronecker(k, 0);
}

Rational rule_stirling_harmonic_orthogonality(long n, long k) {
  if (n < 0) throw std::invalid_argument("stirling_harmonic_orthogonality: n must be >= 0");
  Rational acc(0);
  for (long j = 0; j <= k; ++j) acc += stirling_first(n + 1, k + 1 - j) * c(n, j);
  return acc - sign_of(n) * kronecker(k, 0) * Rational(factorial(n));
}

Rational rule_negative_positive_orthogonality(long n, long k) {
  if (n < 0) throw std::invalid_argument("negative_positive_orthogonality: n must be >= 0");
  Rational acc(0);
  for (long j = 0; j <= k; ++j) acc += sign_of(j) * c(-n - 1, k + 1 - j) * c(n, j);
  return acc + kronecker(k, 0);
}

Rational rule_bernoulli_orthogonality(long n, long k) {
  if (n < 0) throw std::invalid_argument("bernoulli_orthogonality: n must be >= 0");
  Rational acc(0);
  // Terms with j < k-n carry a vanishing binomial factor in the Stirling
  // translation; they are dropped as exact zeros.
  for (long j = std::max<long>(0, k - n); j <= k; ++j) {
    acc += gen_bernoulli(n + 1, n - k + j) / Rational(factorial(n - k + j)) * c(n, j) /
           Rational(factorial(k - j));
  }
  return acc - sign_of(n) * kronecker(k, 0);
}

Rational rule_bernoulli_diagonal(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli_diagonal: n must be >= 0");
  Rational acc(0);
  for (long j = 0; j <= n; ++j)
    acc += gen_bernoulli(n + 1, j) * c(n, j) / Rational(factorial(j) * factorial(n - j));
  return acc - kronecker(n, 0);
}

}  // namespace

const std::vector<std::string>& sum_rule_ids() {
  static const std::vector<std::string> ids = {
      "alternating_negative_degree",
      "negative_degree_total",
      "abel_alternating",
      "binomial_weighted",
      "half_point",
      "minus_half_point",
      "half_point_even",
      "half_point_odd",
      "stirling_orthogonality",
      "stirling_harmonic_orthogonality",
      "negative_positive_orthogonality",
      "bernoulli_orthogonality",
      "stirling_harmonic_diagonal",
      "negative_positive_diagonal",
      "bernoulli_diagonal",
  };
  return ids;
}

Rational sum_rule_residual(const std::string& rule, const std::map<std::string, long>& params) {
  const auto n = [&] { return get_param(params, "n"); };
  const auto k = [&] { return get_param(params, "k"); };
  if (rule == "alternating_negative_degree") return rule_alternating_negative_degree(n());
  if (rule == "negative_degree_total") return rule_negative_degree_total(n());
  if (rule == "abel_alternating") return rule_abel_alternating(n());
  if (rule == "binomial_weighted") return rule_binomial_weighted(n(), k());
  if (rule == "half_point") return rule_half_point(n());
  if (rule == "minus_half_point") return rule_minus_half_point(n());
  if (rule == "half_point_even") return rule_half_point_even(n());
  if (rule == "half_point_odd") return rule_half_point_odd(n());
  if (rule == "stirling_orthogonality") return rule_stirling_orthogonality(n(), k());
  if (rule == "stirling_harmonic_orthogonality")
    return rule_stirling_harmonic_orthogonality(n(), k());
  if (rule == "negative_positive_orthogonality")
    return rule_negative_positive_orthogonality(n(), k());
  if (rule == "bernoulli_orthogonality") return rule_bernoulli_orthogonality(n(), k());
  if (rule == "stirling_harmonic_diagonal") return rule_stirling_harmonic_orthogonality(n(), n());
  if (rule == "negative_positive_diagonal") return rule_negative_positive_orthogonality(n(), n());
  if (rule == "bernoulli_diagonal") return rule_bernoulli_diagonal(n());
  throw std::invalid_argument("sum_rule_residual: unknown rule '" + rule + "'");
}

RationalSequence inverse_relation_apply(const RationalSequence& a, long n, InverseForm form,
                                        InverseDirection direction) {
  if (n < 0) throw std::invalid_argument("inverse_relation_apply: n must be >= 0");
  const long len = static_cast<long>(a.size());
  RationalSequence out(a.size());
  const auto convolve = [&](const std::function<Rational(long)>& kernel) {
    for (long m = 0; m < len; ++m) {
      Rational acc(0);
      for (long l = 0; l <= m; ++l) acc += kernel(l) * a[m - l];
      out[m] = acc;
    }
  };
  switch (form) {
    case InverseForm::stirling:
      if (direction == InverseDirection::forward) {
        convolve([&](long l) { return stirling_first(n + 1, l + 1); });
      } else {
        const Rational scale = sign_of(n) / Rational(factorial(n));
        convolve([&](long j) { return scale * c(n, j); });
      }
      break;
    case InverseForm::bernoulli:
      if (direction == InverseDirection::forward) {
        convolve([&](long l) {
          if (l > n) return Rational(0);  // C(n,l) = 0 beyond n
          return Rational(binomial(n, l)) * gen_bernoulli(n + 1, n - l);
        });
      } else {
        const Rational scale = sign_of(n) / Rational(factorial(n));
        convolve([&](long j) { return scale * c(n, j); });
      }
      break;
    case InverseForm::negative_degree:
      if (direction == InverseDirection::forward) {
        convolve([&](long l) { return sign_of(l + 1) * c(-n - 1, l + 1); });
      } else {
        convolve([&](long j) { return c(n, j); });
      }
      break;
  }
  return out;
}

Rational c_faa_di_bruno(long n, long k, BellKind form) {
  if (n < 1 || k < 1) throw std::invalid_argument("c_faa_di_bruno: requires n >= 1, k >= 1");
  const Integer nfac = factorial(n);
  Rational acc(0);
  for (long j = 1; j <= k; ++j) {
    RationalSequence args(k - j + 1);
    if (form == BellKind::exponential) {
      for (long i = 1; i <= k - j + 1; ++i)
        args[i - 1] = -Rational(nfac) * Rational(factorial(i)) * c(-n - 1, i + 1);
    } else {
      for (long i = 1; i <= k - j + 1; ++i) args[i - 1] = abs(stirling_first(n + 1, i + 1));
    }
    const Rational bell = bell_partial(form, k, j, args);
    const Rational denom = pow(Rational(nfac), j);
    if (form == BellKind::exponential) {
      acc += sign_of(j) * Rational(factorial(j)) / denom * bell;
    } else {
      acc += sign_of(k - j) / denom * bell;
    }
  }
  if (form == BellKind::exponential) acc *= sign_of(k) / Rational(factorial(k));
  return acc;
}

std::pair<Rational, Rational> alternating_partial_sum_range(long n, long k_max) {
  Rational partial(0);
  Rational lo, hi;
  bool first = true;
  for (long k = 0; k <= k_max; ++k) {
    partial += sign_of(k) * c(n, k);
    if (first || partial < lo) lo = partial;
    if (first || partial > hi) hi = partial;
    first = false;
  }
  return {lo, hi};
}

}  // namespace rho
