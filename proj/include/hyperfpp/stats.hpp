#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "hyperfpp/errors.hpp"

namespace hyperfpp::stats {

inline double mean(std::span<const double> xs) {
  if (xs.empty()) throw ValidationError("mean of an empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

/// Unbiased sample variance; 0 for a single observation.
inline double variance(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

inline double standard_error(std::span<const double> xs) {
  return std::sqrt(variance(xs) / static_cast<double>(xs.size()));
}

/// Nearest-rank quantile: the ceil(q N)-th smallest value (the minimum for q = 0).
inline double quantile(std::vector<double> xs, double q) {
  if (xs.empty()) throw ValidationError("quantile of an empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw ValidationError("quantile level must lie in [0, 1]");
  std::sort(xs.begin(), xs.end());
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(xs.size())));
  return xs[rank == 0 ? 0 : rank - 1];
}

inline double median(std::vector<double> xs) { return quantile(std::move(xs), 0.5); }

/// Lag-1 sample autocorrelation.
inline double lag1_autocorrelation(std::span<const double> xs) {
  if (xs.size() < 3) throw ValidationError("autocorrelation needs at least 3 samples");
  const double m = mean(xs);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    den += (xs[i] - m) * (xs[i] - m);
    if (i + 1 < xs.size()) num += (xs[i] - m) * (xs[i + 1] - m);
  }
  return num / den;
}

inline double correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) throw ValidationError("correlation needs equal-length samples");
  const double ma = mean(a), mb = mean(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

/// Binomial standard error sqrt(p(1-p)/n).
inline double binomial_sigma(double p, double n) { return std::sqrt(std::max(0.0, p * (1.0 - p)) / n); }

}  // namespace hyperfpp::stats
