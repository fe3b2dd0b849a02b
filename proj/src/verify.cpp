#include "rho/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "rho/exact_core.hpp"
#include "rho/grid.hpp"
#include "rho/identities.hpp"
#include "rho/numeric_bridge.hpp"
#include "rho/pochhammer.hpp"
#include "rho/polynomial.hpp"
#include "rho/roman_harmonic.hpp"
#include "rho/series.hpp"
#include "rho/stirling.hpp"

namespace rho::verify {

namespace {

constexpr double kEulerGamma = 0.5772156649015329;

struct CaseResult {
  bool pass = true;
  bool exact = true;
  Rational residual;
  double fresidual = 0.0;
  std::string note;
};

using CaseFn = std::function<CaseResult()>;

struct Suite {
  std::string name;
  std::vector<std::string> rules;
  std::vector<std::pair<std::size_t, CaseFn>> cases;

  std::size_t rule(std::string id) {
    rules.push_back(std::move(id));
    return rules.size() - 1;
  }
  void add(std::size_t rule_idx, CaseFn fn) { cases.emplace_back(rule_idx, std::move(fn)); }

  // Exact rule: fn returns an exact residual; passes iff it is zero.
  void exact0(std::size_t rule_idx, std::function<Rational()> fn) {
    add(rule_idx, [fn = std::move(fn)]() {
      CaseResult r;
      r.residual = abs(fn());
      r.pass = r.residual.is_zero();
      return r;
    });
  }

  // Boolean rule: residual is 0 on pass, 1 on failure.
  void truth(std::size_t rule_idx, std::function<bool()> fn, std::string fail_note = {}) {
    add(rule_idx, [fn = std::move(fn), fail_note = std::move(fail_note)]() {
      CaseResult r;
      r.pass = fn();
      r.residual = r.pass ? Rational(0) : Rational(1);
      if (!r.pass) r.note = fail_note;
      return r;
    });
  }

  // Numeric rule: fn returns |difference|; passes iff <= tol.
  void fwithin(std::size_t rule_idx, std::function<double()> fn, double tol) {
    add(rule_idx, [fn = std::move(fn), tol]() {
      CaseResult r;
      r.exact = false;
      r.fresidual = std::abs(fn());
      r.pass = r.fresidual <= tol;
      return r;
    });
  }
};

long hi(long fallback, long override_value) {
  return override_value > 0 ? override_value : fallback;
}

double tol_or(double fallback, double override_value) {
  return override_value > 0 ? override_value : fallback;
}

Rational sign_of(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational max_abs_coeff_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  Rational worst(0);
  const long n = std::min(a.order(), b.order());
  for (long i = 0; i <= n; ++i) {
    const Rational d = abs(a[i] - b[i]);
    if (d > worst) worst = d;
  }
  return worst;
}

// Deterministic pseudo-random rationals for round-trip rules.
struct Lcg {
  unsigned long long state;
  explicit Lcg(unsigned long long seed) : state(seed) {}
  long next(long lo, long hi_incl) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const unsigned long long x = state >> 33;
    return lo + static_cast<long>(x % static_cast<unsigned long long>(hi_incl - lo + 1));
  }
  Rational rational() {
    long den = next(1, 12);
    return Rational(next(-20, 20), den);
  }
  RationalSequence sequence(long len) {
    RationalSequence s(len);
    for (auto& x : s) x = rational();
    return s;
  }
};

// ---------------------------------------------------------------------------
// defs: foundational scalars, Stirling numbers, and every defining path of
// the harmonic table.

void build_defs(Suite& s, const Options& opt) {
  const long n_paths = hi(25, opt.n_max);
  const long k_paths = hi(8, opt.k_max);
  const long n_neg = hi(15, opt.n_max);

  const auto r_roman = s.rule("roman_factorial_recurrence");
  for (long n = -20; n <= 20; ++n)
    s.exact0(r_roman, [n] { return roman_factorial(n) - Rational(roman(n)) * roman_factorial(n - 1); });

  const auto r_binfac = s.rule("binomial_factorial_ratio");
  for (long n = 0; n <= 30; ++n)
    s.exact0(r_binfac, [n] {
      Rational worst(0);
      for (long k = 0; k <= n; ++k) {
        const Rational d = abs(Rational(binomial(n, k)) -
                               Rational(factorial(n)) / Rational(factorial(k) * factorial(n - k)));
        if (d > worst) worst = d;
      }
      return worst;
    });

  const auto r_spoly = s.rule("stirling_polynomial_coeffs");
  for (long n = 0; n <= 12; ++n)
    s.exact0(r_spoly, [n] {
      RationalPolynomial falling(std::vector<Rational>{Rational(1)});
      for (long j = 0; j < n; ++j)
        falling = falling * RationalPolynomial(std::vector<Rational>{Rational(-j), Rational(1)});
      Rational worst(0);
      for (long k = 0; k <= n + 1; ++k) {
        const Rational d = abs(falling.coeff(k) - stirling_first(n, k));
        if (d > worst) worst = d;
      }
      return worst;
    });

  const auto r_sser = s.rule("stirling_series_inverse");
  for (long n = 1; n <= 8; ++n)
    s.exact0(r_sser, [n] {
      TruncatedSeries prod = TruncatedSeries::constant(Rational(1), 12);
      for (long j = 1; j <= n; ++j) {
        TruncatedSeries f = TruncatedSeries::constant(Rational(j), 12);
        f.at(1) = Rational(1);
        prod = prod * f;  // (x+1)_n as a series in x
      }
      const TruncatedSeries inv = prod.inverse();
      Rational worst(0);
      for (long k = 0; k <= 12; ++k) {
        const Rational d = abs(inv[k] - stirling_first(-n, k));
        if (d > worst) worst = d;
      }
      return worst;
    });

  const auto r_srec = s.rule("stirling_recurrence_negative");
  for (long n = 1; n <= 15; ++n)
    for (long k = 1; k <= 10; ++k)
      s.exact0(r_srec, [n, k] {
        return Rational(n) * stirling_first(-n, k) + stirling_first(-n, k - 1) -
               stirling_first(-n + 1, k);
      });

  const auto r_srow = s.rule("stirling_row_sum");
  for (long n = 2; n <= 12; ++n)
    s.exact0(r_srow, [n] {
      Rational acc(0);
      for (long k = 0; k <= n; ++k) acc += stirling_first(n, k);
      return acc;
    });

  const auto r_salt = s.rule("stirling_alternating_row_sum");
  for (long n = 0; n <= 12; ++n)
    s.exact0(r_salt, [n] {
      Rational acc(0);
      for (long k = 0; k <= n; ++k) acc += sign_of(n - k) * stirling_first(n, k);
      return acc - Rational(factorial(n));
    });

  const auto r_zero = s.rule("anchor_degree_zero");
  for (long k = 0; k <= 8; ++k)
    s.exact0(r_zero, [k] { return c(0, k) - (k == 0 ? Rational(1) : Rational(0)); });

  const auto r_one = s.rule("anchor_degree_one");
  for (long k = 0; k <= 40; ++k) s.exact0(r_one, [k] { return c(1, k) - Rational(1); });

  const auto r_negone = s.rule("anchor_negative_first_order");
  for (long n = 1; n <= n_neg; ++n) s.exact0(r_negone, [n] { return c(-n, 1) + Rational(1); });

  const auto r_zreg = s.rule("anchor_zero_region");
  for (long n = 0; n <= 10; ++n)
    for (long k = n + 1; k <= 14; ++k) s.exact0(r_zreg, [n, k] { return c(-n, k); });

  const auto r_harm = s.rule("anchor_harmonic_numbers");
  for (long n = 1; n <= n_paths; ++n) s.exact0(r_harm, [n] { return c(n, 1) - harmonic(n, 1); });

  const auto r_pos = s.rule("sign_positive_degree");
  for (long n = 1; n <= n_paths; ++n)
    s.truth(r_pos, [n, k_paths] {
      for (long k = 0; k <= k_paths; ++k)
        if (!(c(n, k) > Rational(0))) return false;
      return true;
    });

  const auto r_neg = s.rule("sign_negative_degree");
  for (long n = 1; n <= n_neg; ++n)
    s.truth(r_neg, [n, k_paths] {
      for (long k = 0; k <= k_paths; ++k)
        if (c(-n, k) > Rational(0)) return false;
      return true;
    });

  const auto r_ratio = s.rule("ratio_nonincreasing_in_degree");
  for (long k = 0; k <= 6; ++k)
    s.truth(r_ratio, [k] {
      for (long n = 1; n < 50; ++n)
        if (c(n, k) / Rational(n) < c(n + 1, k) / Rational(n + 1)) return false;
      return true;
    });

  const auto r_mono = s.rule("order_increasing_with_limit");
  for (long n = 2; n <= 10; ++n)
    s.truth(r_mono, [n] {
      for (long k = 0; k < 40; ++k)
        if (!(c(n, k) < c(n, k + 1))) return false;
      const Rational top = c(n, 40);
      return top < Rational(n) && Rational(n) - top < Rational(1, 100);
    });

  const auto r_prefix = s.rule("order_step_prefix_sum");
  for (long n = 1; n <= n_paths; ++n)
    for (long k = 1; k <= k_paths; ++k)
      s.exact0(r_prefix, [n, k] {
        Rational acc(0);
        for (long j = 1; j <= n; ++j) acc += c(j, k - 1) / Rational(j);
        return c(n, k) - acc;
      });

  const auto r_pbin = s.rule("path_binomial_sum");
  const auto r_pstir = s.rule("path_stirling_relation");
  const auto r_ppart = s.rule("path_partition_formula");
  for (long n = 1; n <= n_paths; ++n)
    for (long k = 0; k <= k_paths; ++k) {
      s.exact0(r_pbin, [n, k] { return c(n, k) - c_binomial(n, k); });
      s.exact0(r_pstir, [n, k] { return c(n, k) - c_stirling(n, k); });
      s.exact0(r_ppart, [n, k] { return c(n, k) - c_partition(n, k); });
    }

  const auto r_pnstir = s.rule("path_stirling_negative_degree");
  for (long n = 1; n <= n_neg; ++n)
    for (long k = 0; k <= k_paths; ++k)
      s.exact0(r_pnstir, [n, k] { return c(-n, k) - c_stirling(-n, k); });

  const auto r_pgrid = s.rule("path_parallel_kernel");
  s.exact0(r_pgrid, [n_paths, n_neg, k_paths] {
    const GridRange range{-n_neg, n_paths, k_paths};
    const auto serial = c_grid_serial(range);
    const auto parallel = c_grid_parallel(range);
    Rational worst(0);
    for (std::size_t i = 0; i < serial.size(); ++i) {
      const Rational d = abs(serial[i] - parallel[i]);
      if (d > worst) worst = d;
    }
    return worst;
  });

  // Roman-number division keeps the j = n term meaningful at h = 0.
  const auto r_conv = s.rule("convolution_negative_degree");
  for (long n = 1; n <= 10; ++n)
    for (long k = 1; k <= n; ++k)
      for (long h = 0; h < k; ++h)
        s.exact0(r_conv, [n, k, h] {
          Rational rhs(0);
          for (long j = k - h; j <= n - h; ++j)
            rhs += c(-n + j, h) / Rational(roman(-n + j)) * (c(-j, k - h) / Rational(roman(-j)));
          return Rational(binomial(k, h)) * c(-n, k) / Rational(-n) - rhs;
        });

  const auto r_desc = s.rule("descent_negative_degree");
  for (long n = 1; n <= n_neg; ++n)
    for (long k = 1; k <= std::min<long>(n, 8); ++k)
      s.exact0(r_desc, [n, k] {
        Rational acc(0);
        for (long j = k; j <= n; ++j) acc += c(-j, k) / Rational(j);
        return c(-n - 1, k + 1) - acc;
      });
}

// ---------------------------------------------------------------------------
// nested: S- and Z-sum paths.

void build_nested(Suite& s, const Options& opt) {
  const long n_pos = hi(12, opt.n_max);
  const long k_pos = hi(6, opt.k_max);
  const long n_neg = hi(15, opt.n_max);
  const long k_neg = hi(8, opt.k_max);

  const auto r_sbase = s.rule("s_sum_base_cases");
  s.exact0(r_sbase, [] { return s_sum(5, {}, {}) - Rational(1); });
  s.exact0(r_sbase, [] { return s_sum(0, {}, {}); });
  s.exact0(r_sbase, [] { return s_sum(-3, {}, {}); });

  const auto r_zbase = s.rule("z_sum_base_cases");
  s.exact0(r_zbase, [] { return z_sum(0, {}, {}) - Rational(1); });
  s.exact0(r_zbase, [] { return z_sum(-1, {}, {}); });
  s.exact0(r_zbase, [] { return z_sum(3, {}, {}) - Rational(1); });

  const auto r_spath = s.rule("path_s_sum");
  for (long n = 1; n <= n_pos; ++n)
    for (long k = 0; k <= k_pos; ++k)
      s.exact0(r_spath, [n, k] {
        const std::vector<long> weights(k, 1);
        const std::vector<Rational> scales(k, Rational(1));
        return c(n, k) - s_sum(n, weights, scales);
      });

  const auto r_zpath = s.rule("path_z_sum");
  for (long n = 1; n <= n_neg; ++n)
    for (long k = 1; k <= k_neg; ++k)
      s.exact0(r_zpath, [n, k] {
        const std::vector<long> weights(k - 1, 1);
        const std::vector<Rational> scales(k - 1, Rational(1));
        return c(-n, k) + z_sum(n - 1, weights, scales);
      });
}

// ---------------------------------------------------------------------------
// generating: every series construction against the table.

void build_generating(Suite& s, const Options& opt) {
  const long n_gf = hi(10, opt.n_max);
  const long k_gf = hi(12, opt.k_max);
  const long n_coeff = hi(12, opt.n_max);
  const long k_coeff = hi(6, opt.k_max);

  const auto r_order = s.rule("order_gf_coeffs");
  for (long n = 1; n <= n_gf; ++n)
    s.exact0(r_order, [n, k_gf] {
      const TruncatedSeries gf = gf_order(n, k_gf);
      Rational worst(0);
      for (long k = 0; k <= k_gf; ++k) {
        const Rational d = abs(gf[k] - c(n, k));
        if (d > worst) worst = d;
      }
      return worst;
    });

  const auto r_egf = s.rule("degree_egf_coeffs");
  for (long k = 0; k <= k_coeff; ++k)
    s.exact0(r_egf, [k, n_coeff] {
      const TruncatedSeries gf = gf_degree_egf(k, n_coeff);
      Rational worst = abs(gf[0]);  // the sum starts at n = 1
      for (long n = 1; n <= n_coeff; ++n) {
        const Rational d = abs(gf[n] - c(n, k) / Rational(factorial(n)));
        if (d > worst) worst = d;
      }
      return worst;
    });

  const auto r_pl1 = s.rule("polylog_over_n_coeffs");
  const auto r_pl2 = s.rule("polylog_plain_coeffs");
  for (long k = 0; k <= k_coeff; ++k) {
    s.exact0(r_pl1, [k, n_coeff] {
      const TruncatedSeries gf = gf_polylog_composed(k, PolylogVariant::order_over_n, n_coeff);
      Rational worst(0);
      for (long n = 1; n <= n_coeff; ++n) {
        const Rational d = abs(gf[n] - c(n, k) / Rational(n));
        if (d > worst) worst = d;
      }
      return worst;
    });
    s.exact0(r_pl2, [k, n_coeff] {
      const TruncatedSeries gf = gf_polylog_composed(k, PolylogVariant::plain, n_coeff);
      Rational worst(0);
      for (long n = 1; n <= n_coeff; ++n) {
        const Rational d = abs(gf[n] - c(n, k));
        if (d > worst) worst = d;
      }
      return worst;
    });
  }

  const auto r_link = s.rule("polylog_derivative_link");
  for (long k = 0; k <= k_coeff; ++k)
    s.exact0(r_link, [k, n_coeff] {
      const TruncatedSeries a = gf_polylog_composed(k, PolylogVariant::order_over_n, n_coeff);
      const TruncatedSeries b = gf_polylog_composed(k, PolylogVariant::plain, n_coeff);
      return max_abs_coeff_diff(a.derivative().shifted_up(), b);
    });

  const auto r_hyp = s.rule("hypergeometric_order_reduction");
  for (long n = 1; n <= n_gf; ++n)
    s.exact0(r_hyp, [n] {
      const long K = 10;
      TruncatedSeries denom = TruncatedSeries::constant(Rational(1), K);
      for (long j = 1; j <= n; ++j) {
        TruncatedSeries f = TruncatedSeries::constant(Rational(j), K);
        f.at(1) = Rational(-1);
        denom = denom * f;  // (1-z)_n
      }
      const TruncatedSeries base = denom.inverse();  // t^n coefficient scaffold
      const TruncatedSeries gf = gf_order(n, K);
      const Rational nfac(factorial(n));
      Rational worst = max_abs_coeff_diff(base.scaled(nfac), gf);
      worst = std::max(worst, max_abs_coeff_diff(base, gf.scaled(Rational(1) / nfac)));
      worst = std::max(
          worst, max_abs_coeff_diff(base.scaled(Rational(1) / nfac),
                                    gf.scaled(Rational(1) / (nfac * nfac))));
      return worst;
    });

  const auto r_dd = s.rule("differential_difference");
  for (long k = 1; k <= k_coeff; ++k)
    s.exact0(r_dd, [k] {
      const long N = 12;
      const TruncatedSeries fk = f_k_series(k, N);
      const TruncatedSeries lhs = fk.derivative().shifted_up().derivative() -
                                  TruncatedSeries(std::vector<Rational>(fk.coeffs().begin(),
                                                                        fk.coeffs().end() - 1));
      const TruncatedSeries rhs = f_k_series(k - 1, N).derivative();
      return max_abs_coeff_diff(lhs, rhs);
    });

  const auto r_lim = s.rule("order_limit_surrogate");
  for (long n = 1; n <= 8; ++n)
    s.truth(r_lim, [n] {
      const Integer nfac = factorial(n);
      const Rational diff = abs(Rational(n) - c(n, 40)) / Rational(nfac * nfac);
      return diff <= Rational(n) / Rational(1000000);
    });

  const auto r_half = s.rule("half_weight_alternating_tail");
  for (long n = 0; n <= 8; ++n)
    s.truth(r_half, [n] {
      const long K = 40;
      const Integer nfac = factorial(n);
      Rational acc(0);
      Rational w(1);
      for (long k = 0; k <= K; ++k) {
        acc += sign_of(k) * c(n, k) * w;
        w /= Rational(2);
      }
      acc /= Rational(nfac * nfac);
      const Rational target =
          Rational(pow(Integer(2), static_cast<unsigned long>(2 * n)), factorial(2 * n + 1));
      return abs(acc - target) <= Rational(n + 1) * pow(Rational(1, 2), K);
    });

  const auto r_point = s.rule("order_series_at_point");
  for (const Rational& nu : {Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-1, 3)})
    for (long n = 1; n <= 8; ++n)
      s.add(r_point, [nu, n] {
        Rational acc(0);
        for (long k = 0; k <= 60; ++k) acc += c(n, k) * pow(-nu, k);
        const Rational closed = Rational(factorial(n)) / rising_factorial(Rational(1) + nu, n);
        CaseResult r;
        r.exact = false;
        r.fresidual = std::abs((acc - closed).to_double());
        r.pass = r.fresidual <= 1e-12;
        return r;
      });
}

// ---------------------------------------------------------------------------
// transforms: binomial transform machinery, inverse relations, Bell closures.

void build_transforms(Suite& s, const Options& opt) {
  const long n_seq = hi(12, opt.n_max);
  const long k_seq = hi(6, opt.k_max);

  const auto r_inv = s.rule("transform_involution");
  for (long t = 0; t < 16; ++t)
    s.truth(r_inv, [t, n_seq] {
      Lcg rng(0x5eed0000ULL + static_cast<unsigned long long>(t));
      const RationalSequence a = rng.sequence(2 + t % n_seq);
      return binomial_transform(binomial_transform(a)) == a;
    });

  const auto r_pw = s.rule("transform_of_reciprocal_powers");
  for (long k = 0; k <= k_seq; ++k)
    s.exact0(r_pw, [k, n_seq] {
      RationalSequence a(n_seq + 1);
      for (long l = 0; l <= n_seq; ++l)
        a[l] = Rational(1) / Rational(pow(Integer(l + 1), static_cast<unsigned long>(k + 1)));
      const RationalSequence b = binomial_transform(a);
      Rational worst(0);
      for (long n = 0; n <= n_seq; ++n) {
        const Rational d = abs(b[n] - c(n + 1, k) / Rational(n + 1));
        if (d > worst) worst = d;
      }
      return worst;
    });

  const auto r_hm = s.rule("transform_of_harmonics");
  for (long k = 1; k <= k_seq; ++k)
    s.exact0(r_hm, [k, n_seq] {
      RationalSequence a(n_seq + 1);
      a[0] = Rational(0);
      for (long n = 1; n <= n_seq; ++n) a[n] = harmonic(n, k);
      const RationalSequence b = binomial_transform(a);
      Rational worst = abs(b[0]);
      for (long n = 1; n <= n_seq; ++n) {
        const Rational d = abs(b[n] + c(n, k - 1) / Rational(n));
        if (d > worst) worst = d;
      }
      return worst;
    });

  const auto r_euler = s.rule("euler_ogf_transform");
  for (long t = 0; t < 6; ++t)
    s.exact0(r_euler, [t] {
      const long N = 10;
      Lcg rng(0xabc0ULL + static_cast<unsigned long long>(t));
      const RationalSequence a = rng.sequence(N + 1);
      const RationalSequence b = binomial_transform(a);
      const TruncatedSeries f{std::vector<Rational>(a.begin(), a.end())};
      const TruncatedSeries g =
          geometric_series(N) * f.compose(z_over_z_minus_one(N));  // 1/(1-z) f(z/(z-1))
      Rational worst(0);
      for (long n = 0; n <= N; ++n) {
        const Rational d = abs(g[n] - b[n]);
        if (d > worst) worst = d;
      }
      return worst;
    });

  const auto r_egf = s.rule("egf_exponential_relation");
  for (long t = 0; t < 6; ++t)
    s.exact0(r_egf, [t] {
      const long N = 10;
      Lcg rng(0xdef0ULL + static_cast<unsigned long long>(t));
      const RationalSequence a = rng.sequence(N + 1);
      const RationalSequence b = binomial_transform(a);
      TruncatedSeries f_neg(N);  // F(-z)
      for (long n = 0; n <= N; ++n)
        f_neg.at(n) = sign_of(n) * a[n] / Rational(factorial(n));
      const TruncatedSeries g = exp_series(N) * f_neg;
      Rational worst(0);
      for (long n = 0; n <= N; ++n) {
        const Rational d = abs(g[n] - b[n] / Rational(factorial(n)));
        if (d > worst) worst = d;
      }
      return worst;
    });

  const auto roundtrip = [&](const char* name, InverseForm form) {
    const auto r = s.rule(name);
    for (long n = 0; n <= 6; ++n)
      for (long t = 0; t < 4; ++t)
        s.truth(r, [n, t, form] {
          Lcg rng(0xf00d00ULL + static_cast<unsigned long long>(n * 16 + t));
          const RationalSequence a = rng.sequence(2 + (t + n) % 7);
          const RationalSequence b = inverse_relation_apply(a, n, form, InverseDirection::forward);
          return inverse_relation_apply(b, n, form, InverseDirection::backward) == a;
        });
  };
  roundtrip("roundtrip_stirling_form", InverseForm::stirling);
  roundtrip("roundtrip_bernoulli_form", InverseForm::bernoulli);
  roundtrip("roundtrip_negative_degree_form", InverseForm::negative_degree);

  const auto r_bell = s.rule("bell_ordinary_scaling");
  for (long t = 0; t < 8; ++t)
    s.exact0(r_bell, [t] {
      Lcg rng(0xbe11ULL + static_cast<unsigned long long>(t));
      const long k = 2 + t % 5;
      const long j = 1 + t % k;
      RationalSequence x = rng.sequence(k - j + 1);
      RationalSequence scaled(x.size());
      for (std::size_t i = 0; i < x.size(); ++i)
        scaled[i] = Rational(factorial(static_cast<long>(i) + 1)) * x[i];
      const Rational ordinary = bell_partial(BellKind::ordinary, k, j, x);
      const Rational exponential = bell_partial(BellKind::exponential, k, j, scaled);
      return ordinary - Rational(factorial(j)) / Rational(factorial(k)) * exponential;
    });

  const auto r_fde = s.rule("faa_di_bruno_exponential");
  const auto r_fdo = s.rule("faa_di_bruno_ordinary");
  for (long n = 1; n <= 8; ++n)
    for (long k = 1; k <= k_seq; ++k) {
      s.exact0(r_fde, [n, k] { return c_faa_di_bruno(n, k, BellKind::exponential) - c(n, k); });
      s.exact0(r_fdo, [n, k] { return c_faa_di_bruno(n, k, BellKind::ordinary) - c(n, k); });
    }
}

// ---------------------------------------------------------------------------
// sumrules: the residual catalogue on its stated grids.

void build_sumrules(Suite& s, const Options& opt) {
  const long n12 = hi(12, opt.n_max);
  const long n10 = hi(10, opt.n_max);
  const long k6 = hi(6, opt.k_max);
  const long k10 = hi(10, opt.k_max);

  const auto one_param = [&](const std::string& rule, long n_lo, long n_hi) {
    const auto r = s.rule(rule);
    for (long n = n_lo; n <= n_hi; ++n)
      s.exact0(r, [rule, n] { return sum_rule_residual(rule, {{"n", n}}); });
  };
  const auto two_param = [&](const std::string& rule, long n_lo, long n_hi, long k_lo, long k_hi) {
    const auto r = s.rule(rule);
    for (long n = n_lo; n <= n_hi; ++n)
      for (long k = k_lo; k <= k_hi; ++k)
        s.exact0(r, [rule, n, k] { return sum_rule_residual(rule, {{"n", n}, {"k", k}}); });
  };

  one_param("alternating_negative_degree", 2, n12);
  one_param("negative_degree_total", 0, n12);
  one_param("abel_alternating", 0, n12);
  two_param("binomial_weighted", 1, n12, 0, k6);
  one_param("half_point", 0, n10);
  one_param("minus_half_point", 0, n10);
  one_param("half_point_even", 0, n10);
  one_param("half_point_odd", 0, n10);
  two_param("stirling_orthogonality", 0, n10, 0, k10);
  two_param("stirling_harmonic_orthogonality", 0, n10, 0, k10);
  two_param("negative_positive_orthogonality", 0, n10, 0, k10);
  two_param("bernoulli_orthogonality", 0, n10, 0, k10);
  one_param("stirling_harmonic_diagonal", 0, n10);
  one_param("negative_positive_diagonal", 0, n10);
  one_param("bernoulli_diagonal", 0, n10);
}

// ---------------------------------------------------------------------------
// pochhammer: derivative formulas against the symbolic polynomial oracle.

const std::vector<Rational>& sample_points() {
  static const std::vector<Rational> pts = {Rational(0),     Rational(1),     Rational(-1),
                                            Rational(2),     Rational(-2),    Rational(1, 2),
                                            Rational(-1, 2), Rational(3, 7)};
  return pts;
}

// k-th derivative of 1/(x)_n by the quotient rule with fixed denominator
// power: f^(k) = P_k / ((x)_n)^(k+1), P_{k+1} = P_k' Q - (k+1) P_k Q'.
Rational recip_oracle(long n, long k, const Rational& x) {
  const RationalPolynomial q = pochhammer_poly(n);
  const RationalPolynomial dq = q.derivative();
  RationalPolynomial p(std::vector<Rational>{Rational(1)});
  for (long i = 0; i < k; ++i)
    p = p.derivative() * q + p * dq.scaled(Rational(-(i + 1)));
  return p.evaluate(x) / pow(q.evaluate(x), k + 1);
}

void build_pochhammer(Suite& s, const Options& opt) {
  const long n_hi = hi(10, opt.n_max);
  const long n8 = std::min<long>(n_hi, hi(8, opt.n_max));
  const long k_hi = hi(8, opt.k_max);
  const long k6 = hi(6, opt.k_max);

  const auto r_coeff = s.rule("poly_coeffs_negative_degree");
  for (long n = 1; n <= 12; ++n)
    s.exact0(r_coeff, [n] {
      const RationalPolynomial p = pochhammer_poly(n);
      const Rational scale(-factorial(n - 1));
      Rational worst(0);
      for (long l = 0; l <= n; ++l) {
        const Rational d = abs(p.coeff(l) - scale * c(-n, l));
        if (d > worst) worst = d;
      }
      return worst;
    });

  const auto r_deriv = s.rule("deriv_matches_poly_oracle");
  for (long n = 1; n <= n_hi; ++n)
    for (long k = 0; k <= k_hi; ++k)
      s.exact0(r_deriv, [n, k] {
        const RationalPolynomial oracle = pochhammer_poly(n).derivative(k);
        Rational worst(0);
        for (const Rational& x : sample_points()) {
          const Rational d = abs(pochhammer_deriv(n, k, x) - oracle.evaluate(x));
          if (d > worst) worst = d;
        }
        return worst;
      });

  const auto r_forms = s.rule("deriv_coeff_form_agreement");
  for (long n = 1; n <= n8; ++n)
    for (long k = 0; k <= k6; ++k)
      s.exact0(r_forms, [n, k] {
        Rational worst(0);
        for (const Rational& x : sample_points()) {
          const Rational d = abs(pochhammer_deriv(n, k, x) - pochhammer_deriv_coeff_form(n, k, x));
          if (d > worst) worst = d;
        }
        return worst;
      });

  const auto r_int = s.rule("deriv_at_integer_points");
  for (long n = 1; n <= n8; ++n)
    for (long k = 0; k <= k6; ++k)
      s.exact0(r_int, [n, k] {
        const RationalPolynomial oracle = pochhammer_poly(n).derivative(k);
        Rational worst(0);
        for (long N = -10; N <= 10; ++N) {
          const Rational d = abs(pochhammer_deriv_at_int(n, k, N) - oracle.evaluate(Rational(N)));
          if (d > worst) worst = d;
        }
        return worst;
      });

  const auto r_recip = s.rule("recip_matches_quotient_oracle");
  for (long n = 1; n <= n8; ++n)
    for (long k = 0; k <= k6; ++k)
      s.exact0(r_recip, [n, k] {
        Rational worst(0);
        for (const Rational& x :
             {Rational(1), Rational(2), Rational(1, 2), Rational(-7, 2), Rational(1, 3)}) {
          const Rational d = abs(recip_deriv(n, k, x) - recip_oracle(n, k, x));
          if (d > worst) worst = d;
        }
        return worst;
      });

  const auto r_rint = s.rule("recip_at_integer_points");
  for (long n = 1; n <= n8; ++n)
    for (long k = 0; k <= k6; ++k)
      s.exact0(r_rint, [n, k] {
        Rational worst(0);
        for (long N = 1; N <= 5; ++N) {
          const Rational d = abs(recip_deriv_at_int(n, k, N) - recip_deriv(n, k, Rational(N)));
          if (d > worst) worst = d;
        }
        for (long N = -n; N >= -n - 3; --N) {
          const Rational d = abs(recip_deriv_at_int(n, k, N) - recip_deriv(n, k, Rational(N)));
          if (d > worst) worst = d;
        }
        return worst;
      });

  const auto r_prod = s.rule("product_identity");
  for (long n = 1; n <= n8; ++n)
    for (long k = 0; k <= k6; ++k)
      s.exact0(r_prod, [n, k] {
        Rational worst(0);
        for (const Rational& x : {Rational(1), Rational(2), Rational(1, 2), Rational(-7, 2)}) {
          const Rational d = abs(product_identity_residual(n, k, x));
          if (d > worst) worst = d;
        }
        return worst;
      });

  const auto r_series = s.rule("recip_series_coeffs");
  for (long n = 1; n <= 6; ++n)
    s.exact0(r_series, [n] {
      const TruncatedSeries ser = recip_series(n, 12);
      Rational worst(0);
      for (long j = 0; j <= 12; ++j) {
        const Rational expected = sign_of(j) * c(n - 1, j) / Rational(factorial(n - 1));
        const Rational d = abs(ser[j] - expected);
        if (d > worst) worst = d;
      }
      return worst;
    });

  // Termwise derivative of the disk expansion against the partial-fraction
  // value at x = 1/3: within the exact tail bound at 25 kept terms, and at
  // 1e-15 with 60 kept terms.
  const auto r_tail = s.rule("recip_series_consistency");
  for (long n = 1; n <= 6; ++n)
    for (long k = 0; k <= 4; ++k)
      s.add(r_tail, [n, k] {
        const Rational x(1, 3);
        const Rational exact = recip_deriv(n, k, x);
        const auto partial = [&](long kept) {
          Rational sum = Rational(factorial(k)) / pow(x, k + 1);
          for (long l = 0; l < kept; ++l) {
            const Rational term = Rational(rising_factorial(Integer(l + 1), k)) *
                                  c(n - 1, k + l + 1) * pow(x, l);
            sum += sign_of(l + 1) * term;
          }
          return sign_of(k) / Rational(factorial(n - 1)) * sum;
        };
        const auto tail_bound = [&](long kept) {
          // First dropped term bounded with c_{n-1} < n; ratio <= 1/2.
          const Rational first = Rational(rising_factorial(Integer(kept + 1), k)) * Rational(n) *
                                 pow(x, kept) / Rational(factorial(n - 1));
          return Rational(2) * first;
        };
        CaseResult r;
        const Rational diff25 = abs(partial(25) - exact);
        const Rational diff60 = abs(partial(60) - exact);
        r.pass = diff25 <= tail_bound(25) && std::abs(diff60.to_double()) <= 1e-15;
        r.residual = diff60;
        if (!r.pass) r.note = "disk expansion drifted from partial fractions";
        return r;
      });

  const auto r_diff = s.rule("difference_operator_form");
  for (long n = 1; n <= n8; ++n)
    for (long k = 0; k <= std::min<long>(k6, 5); ++k)
      s.exact0(r_diff, [n, k] {
        Rational worst(0);
        for (const Rational& x : {Rational(1), Rational(5, 2)}) {
          RationalSequence samples(n);
          for (long j = 0; j < n; ++j) samples[j] = Rational(1) / pow(x + Rational(j), k + 1);
          const Rational via_delta = sign_of(n - k + 1) * Rational(factorial(k)) /
                                     Rational(factorial(n - 1)) *
                                     difference_apply(samples, n - 1);
          const Rational d = abs(recip_deriv(n, k, x) - via_delta);
          if (d > worst) worst = d;
        }
        return worst;
      });

  const auto r_pair = s.rule("recip_binomial_transform_pair");
  for (long k = 0; k <= 4; ++k)
    s.exact0(r_pair, [k] {
      const Rational x(1, 3);
      const long len = 9;
      RationalSequence u(len), v(len);
      for (long n = 0; n < len; ++n) {
        u[n] = Rational(factorial(n)) * recip_deriv(n + 1, k, x);
        v[n] = sign_of(k) * Rational(factorial(k)) / pow(x + Rational(n), k + 1);
      }
      const RationalSequence tu = binomial_transform(u);
      const RationalSequence tv = binomial_transform(v);
      Rational worst(0);
      for (long n = 0; n < len; ++n) {
        const Rational d1 = abs(tu[n] - v[n]);
        const Rational d2 = abs(tv[n] - u[n]);
        if (d1 > worst) worst = d1;
        if (d2 > worst) worst = d2;
      }
      return worst;
    });
}

// ---------------------------------------------------------------------------
// numeric: quadratures, asymptotics, polylog targets.

void build_numeric(Suite& s, const Options& opt) {
  const auto r_quad = s.rule("quadrature_matches_exact");
  for (long n = 1; n <= hi(8, opt.n_max); ++n)
    for (long k = 0; k <= hi(5, opt.k_max); ++k)
      s.fwithin(
          r_quad,
          [n, k] { return quad_c(n, k, 1e-10).value - c(n, k).to_double(); },
          tol_or(1e-9, opt.tol));

  const auto r_mom = s.rule("moment_matches_exact");
  for (long D = 2; D <= hi(8, opt.n_max); ++D)
    for (long p = 0; p <= std::min<long>(hi(4, opt.k_max), 4); ++p)
      s.fwithin(
          r_mom,
          [D, p] {
            const Rational exact =
                Rational(factorial(p)) / Rational(pow(Integer(2), static_cast<unsigned long>(p))) *
                c(D - 1, p);
            return distribution_moment(D, p, 1e-9).value - exact.to_double();
          },
          tol_or(1e-8, opt.tol));

  const auto r_gamma = s.rule("gamma_gap");
  for (const long n : {1000L, 10000L})
    s.add(r_gamma, [n] {
      CaseResult r;
      r.exact = false;
      r.fresidual = std::abs(harmonic_gap(n) - kEulerGamma);
      r.pass = r.fresidual <= 10.0 / static_cast<double>(n);
      return r;
    });

  const auto r_asym = s.rule("asymptotic_gap_loose");
  s.fwithin(r_asym, [] { return asymptotic_gap(10000, 2) - 1.0; }, 0.25);

  const auto r_pln = s.rule("polylog_sum_over_n");
  for (long k = 0; k <= 4; ++k)
    s.fwithin(
        r_pln,
        [k] {
          const PolylogNeg1 li = polylog_neg1(k + 1);
          const double target = li.pi_power_multiple
                                    ? li.pi_power_multiple->to_double() *
                                          std::pow(M_PI, static_cast<double>(k + 1))
                                    : li.value;
          return polylog_partial_sum(k, PolylogSumVariant::over_n, 60) + target;
        },
        tol_or(1e-10, opt.tol));

  const auto r_plp = s.rule("polylog_sum_plain");
  for (long k = 0; k <= 4; ++k)
    s.fwithin(
        r_plp,
        [k] {
          double target = 1.0;  // -2 Li_0(-1) = 1
          if (k >= 1) {
            const PolylogNeg1 li = polylog_neg1(k);
            target = -2.0 * (li.pi_power_multiple
                                 ? li.pi_power_multiple->to_double() *
                                       std::pow(M_PI, static_cast<double>(k))
                                 : li.value);
          }
          return polylog_partial_sum(k, PolylogSumVariant::plain, 60) - target;
        },
        tol_or(1e-10, opt.tol));

  const auto r_sk = s.rule("second_kind_expansion");
  s.fwithin(r_sk, [] { return second_kind_partial(1, 3, 1) - 1.0; }, 0.0);
  s.fwithin(r_sk, [] { return second_kind_partial(2, 1, 40) - 1.5; }, tol_or(1e-9, opt.tol));
  s.fwithin(
      r_sk, [] { return second_kind_partial(3, 2, 60) - c(3, 2).to_double(); },
      tol_or(1e-8, opt.tol));
  for (long n = 1; n <= 4; ++n)
    for (long k = 0; k <= 4; ++k)
      s.fwithin(
          r_sk,
          [n, k] { return second_kind_partial(n, k, 150) - c(n, k).to_double(); },
          tol_or(1e-8, opt.tol));

  const auto r_skm = s.rule("second_kind_monotone");
  for (long n = 1; n <= 4; ++n)
    s.truth(r_skm, [n] {
      double prev = 0.0;
      for (long terms = 1; terms <= 40; terms += 3) {
        const double v = second_kind_partial(n, 2, terms);
        if (v + 1e-14 < prev) return false;
        prev = v;
      }
      return true;
    });

  const auto r_hyp = s.rule("hyper_series_vs_quadrature");
  for (long k = 0; k <= 4; ++k)
    for (const double z : {-2.0, -1.0, 0.0, 1.0, 2.0})
      s.fwithin(
          r_hyp,
          [k, z] {
            const auto [lhs, rhs] = hyper_quad(k, z, 1e-11);
            return lhs - rhs;
          },
          tol_or(1e-10, opt.tol));
}

using Builder = void (*)(Suite&, const Options&);

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> list = {
      {"defs", build_defs},           {"nested", build_nested},
      {"generating", build_generating}, {"transforms", build_transforms},
      {"sumrules", build_sumrules},   {"pochhammer", build_pochhammer},
      {"numeric", build_numeric},
  };
  return list;
}

std::vector<RuleSummary> run(const Suite& suite, const Options& options) {
  std::vector<CaseResult> results(suite.cases.size());
  const long total = static_cast<long>(suite.cases.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (long i = 0; i < total; ++i) {
    try {
      results[i] = suite.cases[i].second();
    } catch (const std::exception& e) {
      CaseResult r;
      r.pass = false;
      r.residual = Rational(1);
      r.note = e.what();
      results[i] = r;
    }
  }
  std::vector<RuleSummary> summaries(suite.rules.size());
  std::vector<std::size_t> first_failure(suite.rules.size(), suite.cases.size());
  for (std::size_t r = 0; r < suite.rules.size(); ++r) {
    summaries[r].suite = suite.name;
    summaries[r].rule = suite.rules[r];
  }
  for (std::size_t i = 0; i < suite.cases.size(); ++i) {
    const std::size_t r = suite.cases[i].first;
    RuleSummary& agg = summaries[r];
    const CaseResult& res = results[i];
    ++agg.cases;
    if (!res.exact) agg.exact = false;
    if (res.residual > agg.max_residual) agg.max_residual = res.residual;
    if (res.fresidual > agg.max_fresidual) agg.max_fresidual = res.fresidual;
    if (!res.pass) {
      agg.pass = false;
      if (i < first_failure[r]) {
        first_failure[r] = i;
        agg.note = res.note;
      }
    }
  }
  return summaries;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : builders()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<RuleSummary> run_suite(const std::string& name, const Options& options) {
  if (name == "all") {
    std::vector<RuleSummary> all;
    for (const auto& [suite_name, fn] : builders()) {
      auto part = run_suite(suite_name, options);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  for (const auto& [suite_name, fn] : builders()) {
    if (suite_name != name) continue;
    Suite suite;
    suite.name = suite_name;
    fn(suite, options);
    // Warm the shared tables once, serially, so parallel case evaluation is
    // read-mostly.
    harmonic_table().warm(-70, 70, 70);
    return run(suite, options);
  }
  throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

bool all_passed(const std::vector<RuleSummary>& summaries) {
  for (const auto& s : summaries)
    if (!s.pass) return false;
  return true;
}

}  // namespace rho::verify
