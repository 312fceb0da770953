#pragma once

#include <cmath>

#include "hyperfpp/gamma.hpp"

namespace hyperfpp {

/// P(min of n! independent Gamma(n,1) sums <= x) = 1 - (1 - F_n(x))^{n!},
/// evaluated as -expm1(n! log1p(-F)) with n! and F kept in logs so any n works.
inline double independent_min_cdf(int n, double x) {
  if (n < 1) throw DomainError("independent_min_cdf needs n >= 1");
  if (!(x > 0.0)) throw DomainError("independent_min_cdf needs x > 0");
  const double log_f = log_gamma_tail(n, x);
  // log(-log1p(-F)); for tiny F this is log F to within F/2.
  const double log_hazard = log_f < -30.0 ? log_f : std::log(-std::log1p(-std::exp(log_f)));
  return -std::expm1(-std::exp(std::lgamma(n + 1.0) + log_hazard));
}

/// x*(n) with independent_min_cdf(n, x*) = 1/2, by bisection to 1e-13.
inline double independent_min_median(int n) {
  double lo = 1e-6, hi = 1.0;
  while (independent_min_cdf(n, hi) < 0.5) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1e-13 * hi) {
    const double mid = 0.5 * (lo + hi);
    (independent_min_cdf(n, mid) < 0.5 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace hyperfpp
