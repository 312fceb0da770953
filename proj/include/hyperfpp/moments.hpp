#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperfpp/enumerate.hpp"
#include "hyperfpp/fnk.hpp"
#include "hyperfpp/gamma.hpp"
#include "hyperfpp/parallel.hpp"
#include "hyperfpp/stats.hpp"
#include "hyperfpp/weights.hpp"

namespace hyperfpp {

/// Middle-sum threshold 1 + eps/3 for connecting paths.
inline double connecting_threshold(double eps) { return 1.0 + eps / 3.0; }

/// log E N^(1) = log(|A| |A'| (n-2)! P(Gamma(n-2) <= 1 + eps/3)).
inline double mean_connecting_log(int n, double eps, int size_first, int size_last) {
  if (n < 3) throw DomainError("mean_connecting needs n >= 3");
  if (!(eps > 0.0)) throw DomainError("mean_connecting needs eps > 0");
  if (size_first < 1 || size_last < 1 || size_first + size_last > n)
    throw DomainError("endpoint set sizes must be positive with |A| + |A'| <= n");
  return std::log(static_cast<double>(size_first)) + std::log(static_cast<double>(size_last)) + std::lgamma(n - 1.0) +
         log_gamma_tail(n - 2, connecting_threshold(eps));
}

/// Natural logs of the three vanishing terms of the second-moment ratio, with
/// K(n) = n^{1/4} and every (1 + o(1)) and kappa factor set to 1.
struct BoundTermLog {
  double n = 0.0;
  double eps = 0.0;
  double c = 0.0;
  double t1_log = 0.0;                // small overlaps:    12/(c^2 eps) n^{-3/4}
  double t2_log = 0.0;                // moderate overlaps: 12 n^6/(eps c^2) (1+eps/3)^{-n^{1/4}}
  std::optional<double> t3_log;       // extreme overlaps:  n^n / (ne (1+eps/3))^{ne}; needs ne > 2
};

inline BoundTermLog second_moment_terms(double n, double eps, double c) {
  if (!(n >= 1.0)) throw DomainError("second_moment_terms needs n >= 1");
  if (!(eps > 0.0)) throw DomainError("second_moment_terms needs eps > 0");
  if (!(c > 0.0 && c < 1.0)) throw DomainError("second_moment_terms needs c in (0, 1)");
  BoundTermLog t;
  t.n = n;
  t.eps = eps;
  t.c = c;
  const double log_n = std::log(n);
  const double log_growth = std::log1p(eps / 3.0);
  t.t1_log = std::log(12.0 / (c * c * eps)) - 0.75 * log_n;
  t.t2_log = std::log(12.0 / (eps * c * c)) + 6.0 * log_n - std::pow(n, 0.25) * log_growth;
  const double level = ne(n);
  if (level > 2.0) {
    // n ln n - ne ln ne without cancellation: with d = n - ne,
    // n ln n - ne ln ne = d ln n - ne log1p(-d/n).
    const double d = n - level;
    t.t3_log = d * log_n - level * std::log1p(-d / n) - level * log_growth;
  }
  return t;
}

/// Finite-n upper bound on E[(N^(1))^2] built from exact overlap counts:
///   Sigma_A     <= (E N)^2
///   Sigma_{A^c} <= |A||A'| (n-2)! [ sum_{k=1}^{n-3} f(n,k) P_{n-2} P_{n-2-k} + P_{n-2} ]
/// with P_m = P(Gamma(m) <= 1 + eps/3).
struct SecondMomentBound {
  double mean = 0.0;
  double sigma_a_bound = 0.0;
  double sigma_ac_bound = 0.0;
  double second_moment_bound = 0.0;
  double pz_lower = 0.0;  // (E N)^2 / second_moment_bound
};

inline SecondMomentBound second_moment_bound(const FnkTable& table, double eps, int size_first, int size_last) {
  const int n = table.n;
  const double t = connecting_threshold(eps);
  const double paths = static_cast<double>(size_first) * size_last * std::exp(std::lgamma(n - 1.0));
  const double p_full = gamma_lower_cdf(n - 2, t).cdf;
  double overlap = p_full;
  for (int k = 1; k <= n - 3; ++k)
    overlap += static_cast<double>(table.f[static_cast<std::size_t>(k)]) * p_full * gamma_lower_cdf(n - 2 - k, t).cdf;
  SecondMomentBound b;
  b.mean = paths * p_full;
  b.sigma_a_bound = b.mean * b.mean;
  b.sigma_ac_bound = paths * overlap;
  b.second_moment_bound = b.sigma_a_bound + b.sigma_ac_bound;
  b.pz_lower = b.mean * b.mean / b.second_moment_bound;
  return b;
}

/// Monte Carlo estimates of the Paley-Zygmund ingredients for N^(1).
struct PzEstimate {
  double mean = 0.0;
  double mean_sigma = 0.0;
  double second_moment = 0.0;
  double pz_lower_bound = 0.0;  // mean^2 / second_moment
  double hit_rate = 0.0;        // fraction of streams with N^(1) > 0
  double hit_sigma = 0.0;
  std::vector<std::uint64_t> counts;
};

/// Enumerates N^(1) on `streams` replicas derived from `seed` (n <= 9).
inline PzEstimate empirical_pz_ratio(int n, double eps, const EndpointSets& ends, std::size_t streams, Seed seed,
                                     unsigned threads = 1) {
  if (n > 9) throw ResourceError("empirical_pz_ratio enumerates paths; n <= 9");
  if (n < 3) throw DomainError("empirical_pz_ratio needs n >= 3");
  if (streams == 0) throw ValidationError("streams must be at least 1");
  PzEstimate est;
  est.counts.resize(streams);
  const double t = connecting_threshold(eps);
  parallel_for(streams, threads,
               [&](std::size_t r) { est.counts[r] = enumerate_counts(n, derive_replica(seed, r), t, ends); });
  std::vector<double> values(streams);
  double second = 0.0, hits = 0.0;
  for (std::size_t r = 0; r < streams; ++r) {
    values[r] = static_cast<double>(est.counts[r]);
    second += values[r] * values[r];
    hits += est.counts[r] > 0 ? 1.0 : 0.0;
  }
  const double count = static_cast<double>(streams);
  est.mean = stats::mean(values);
  est.mean_sigma = stats::standard_error(values);
  est.second_moment = second / count;
  est.pz_lower_bound = est.second_moment > 0.0 ? est.mean * est.mean / est.second_moment : 0.0;
  est.hit_rate = hits / count;
  est.hit_sigma = stats::binomial_sigma(est.hit_rate, count);
  return est;
}

}  // namespace hyperfpp
