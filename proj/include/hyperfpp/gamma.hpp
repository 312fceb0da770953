#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "hyperfpp/errors.hpp"
#include "hyperfpp/weights.hpp"

namespace hyperfpp {

/// P(Gamma(n,1) <= x) written as (1 + K) e^{-x} x^n / n!.
struct GammaTail {
  int n = 0;
  double x = 0.0;
  double cdf = 0.0;
  double correction = 0.0;  // K(x, n)
};

namespace detail {

// K(x, n) = sum_{j>=1} x^j / ((n+1)(n+2)...(n+j)). Terms shrink geometrically once
// n + j > x, so the tail after a term is at most term * r / (1 - r) with r = x / (n+j+1).
inline double gamma_correction(double n, double x) {
  double term = 1.0, sum = 0.0;
  for (std::uint64_t j = 1; j < 100'000'000; ++j) {
    term *= x / (n + static_cast<double>(j));
    sum += term;
    const double ratio = x / (n + static_cast<double>(j) + 1.0);
    if (ratio < 1.0 && term * ratio / (1.0 - ratio) <= 1e-16 * sum) break;
    if (term == 0.0) break;
  }
  return sum;
}

// e^{-x} x^n / n!. Multiplied out factor by factor when that cannot underflow; in
// that range the result is accurate to about n ulps.
inline double poisson_weight(int n, double x) {
  const double log_p = -x + n * std::log(x) - std::lgamma(n + 1.0);
  if (n > 2000 || log_p < -700.0) return std::exp(log_p);
  double p = std::exp(-x);
  for (int k = 1; k <= n; ++k) p *= x / k;
  return p;
}

inline void require_tail_arguments(double n, double x) {
  if (!(n >= 0.0)) throw DomainError("gamma tail needs n >= 0");
  if (!(x >= 0.0) || std::isinf(x)) throw DomainError("gamma tail needs finite x >= 0");
}

}  // namespace detail

/// Lower tail of Gamma(n, 1) from the forward series e^{-x} sum_{k>=n} x^k/k!.
/// n = 0 is the empty sum (cdf 1). Rejects x > 700, where e^{x} overflows; use log_gamma_tail.
inline GammaTail gamma_lower_cdf(int n, double x) {
  detail::require_tail_arguments(n, x);
  if (x > 700.0) throw DomainError("gamma_lower_cdf: x > 700 overflows, use log_gamma_tail");
  if (n == 0) return {0, x, 1.0, std::expm1(x)};
  if (x == 0.0) return {n, x, 0.0, 0.0};
  const double k = detail::gamma_correction(n, x);
  return {n, x, detail::poisson_weight(n, x) * (1.0 + k), k};
}

/// log P(Gamma(n,1) <= x), finite for very large n (n is taken as a real to reach 1e16).
inline double log_gamma_tail(double n, double x) {
  detail::require_tail_arguments(n, x);
  if (n == 0.0) return 0.0;
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (x <= 700.0 || n > x) {
    const double log_p = -x + n * std::log(x) - std::lgamma(n + 1.0);
    return log_p + std::log1p(detail::gamma_correction(n, x));
  }
  // x > 700 and n <= x: the upper tail e^{-x} sum_{k<n} x^k/k! is dominated by its last term.
  const double log_last = -x + (n - 1.0) * std::log(x) - std::lgamma(n);
  double term = 1.0, sum = 1.0;
  for (double m = n - 1.0; m >= 1.0; m -= 1.0) {
    term *= m / x;
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return std::log1p(-std::exp(log_last + std::log(sum)));
}

/// First-moment bound on P(m_n <= x): min(1, n! P(Gamma(n) <= x)) = min(1, e^{-x} x^n (1 + K)).
inline double markov_upper(int n, double x) {
  if (!(x > 0.0)) throw DomainError("markov_upper needs x > 0");
  if (n < 1) throw DomainError("markov_upper needs n >= 1");
  if (x > 700.0) return 1.0;
  const double log_bound = -x + n * std::log(x) + std::log1p(detail::gamma_correction(n, x));
  return log_bound >= 0.0 ? 1.0 : std::exp(log_bound);
}

struct JointTailEstimate {
  double estimate = 0.0;  // P(X_n <= x, X'_n <= x) by Monte Carlo
  double sigma = 0.0;     // binomial standard error of the estimate
  double bound = 0.0;     // P(X_n <= x) P(X_{n-k} <= x)
};

/// Two Gamma(n) sums sharing exactly k exponentials. The shared terms are literally
/// the same draws. Trial t reads ids [2nt, 2nt + 2n) of the stream.
inline JointTailEstimate joint_tail_check(int n, int k, double x, std::uint64_t trials, const WeightStream& stream) {
  if (n < 1) throw DomainError("joint_tail_check needs n >= 1");
  if (k < 0 || k > n) throw DomainError("joint_tail_check needs 0 <= k <= n");
  if (trials == 0) throw ValidationError("trials must be at least 1");
  const auto nn = static_cast<std::uint64_t>(n);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t base = 2 * nn * t;
    double shared = 0.0, own = 0.0, other = 0.0;
    for (std::uint64_t i = 0; i < nn; ++i) {
      const double xi = stream(EdgeId{base + i});
      if (i < static_cast<std::uint64_t>(k)) {
        shared += xi;
      } else {
        own += xi;
        other += stream(EdgeId{base + nn + i});
      }
    }
    if (shared + own <= x && shared + other <= x) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(trials);
  JointTailEstimate out;
  out.estimate = p;
  out.sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  out.bound = gamma_lower_cdf(n, x).cdf * gamma_lower_cdf(n - k, x).cdf;
  return out;
}

}  // namespace hyperfpp
