#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rho/rational.hpp"

namespace rho {

using RationalSequence = std::vector<Rational>;

// b_n = sum_{l=0..n} (-1)^l C(n,l) a_l; an involution.
RationalSequence binomial_transform(const RationalSequence& a);

// Forward difference: Delta^n f(x) = sum_{j=0..n} (-1)^(n-j) C(n,j) f(x+j),
// with samples[j] = f(x+j). Needs at least n+1 samples.
Rational difference_apply(const RationalSequence& samples, long n);

enum class BellKind { exponential, ordinary };

// Partial Bell polynomial B_{k,j}(x_1..x_{k-j+1}) (exponential) or its
// ordinary (composition-weighted) variant, by the (k,j) recurrence.
Rational bell_partial(BellKind kind, long k, long j, const RationalSequence& args);

// Exact residual LHS - RHS of one of the named sum rules; 0 for every valid
// parameter choice. Parameters are taken from `params` ("n", and "k" where
// the rule has an order parameter).
Rational sum_rule_residual(const std::string& rule, const std::map<std::string, long>& params);

const std::vector<std::string>& sum_rule_ids();

enum class InverseForm { stirling, bernoulli, negative_degree };
enum class InverseDirection { forward, backward };

// Convolution inverse pairs: forward maps a -> b, backward recovers a from b
// for the same fixed n.
RationalSequence inverse_relation_apply(const RationalSequence& a, long n, InverseForm form,
                                        InverseDirection direction);

// c_n^(k) reconstructed through partial Bell polynomials: exponential form
// from negative-degree numbers, ordinary form from unsigned first-kind
// Stirling numbers. n >= 1, k >= 1.
Rational c_faa_di_bruno(long n, long k, BellKind form);

// Extremes (min, max) of the partial sums sum_{k=0..K} (-1)^k c_n^(k) over
// 0 <= K <= k_max; informational (the full series is summable only in the
// Abel sense).
std::pair<Rational, Rational> alternating_partial_sum_range(long n, long k_max);

}  // namespace rho
