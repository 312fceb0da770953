#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "hyperfpp/parallel.hpp"
#include "hyperfpp/stats.hpp"
#include "hyperfpp/weights.hpp"

namespace hyperfpp {

/// P(xi <= t) P(xi > t) for a mean-one exponential.
inline double good_edge_probability(double t) {
  if (!(t > 0.0)) throw DomainError("good-edge threshold must be positive");
  return -std::expm1(-t) * std::exp(-t);
}

struct GoodEdgeStats {
  double fraction_mean = 0.0;
  double p_analytic = 0.0;
  double sigma = 0.0;  // binomial standard error of fraction_mean under p_analytic
  std::vector<double> fractions;
};

/// Fraction of coordinates v whose edge out of 0 has weight <= t while the edge into 1
/// along v has weight > t. The two edge families are disjoint, so each replica draws 2n
/// independent weights: ids [0, n) for the edges at 0 and [n, 2n) for the edges at 1.
inline GoodEdgeStats good_edge_stats(std::uint64_t n, double t, std::size_t reps, Seed seed, unsigned threads = 1) {
  if (n < 1) throw DomainError("good_edge_stats needs n >= 1");
  if (reps == 0) throw ValidationError("reps must be at least 1");
  GoodEdgeStats out;
  out.p_analytic = good_edge_probability(t);
  out.fractions.resize(reps);
  parallel_for(reps, threads, [&](std::size_t r) {
    const WeightStream stream = derive_replica(seed, r);
    std::uint64_t good = 0;
    for (std::uint64_t v = 0; v < n; ++v)
      if (stream(EdgeId{v}) <= t && stream(EdgeId{n + v}) > t) ++good;
    out.fractions[r] = static_cast<double>(good) / static_cast<double>(n);
  });
  out.fraction_mean = stats::mean(out.fractions);
  out.sigma = stats::binomial_sigma(out.p_analytic, static_cast<double>(n) * static_cast<double>(reps));
  return out;
}

}  // namespace hyperfpp
