#pragma once

// Test-only weight sources and oracles that do not share code with the paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hyperfpp/core.hpp"
#include "hyperfpp/weights.hpp"

namespace hyperfpp::testing {

struct ConstantWeights {
  double c;
  double operator()(EdgeId) const { return c; }
};

/// Explicit table with a fallback for unlisted edges.
struct TableWeights {
  std::map<std::uint64_t, double> table;
  double fallback = 1.0;
  double operator()(EdgeId e) const {
    const auto it = table.find(e.value);
    return it == table.end() ? fallback : it->second;
  }
};

template <class W>
struct ScaledWeights {
  W base;
  double factor;
  double operator()(EdgeId e) const { return factor * base(e); }
};

template <class W>
struct BumpedWeights {
  W base;
  EdgeId target;
  double delta;
  double operator()(EdgeId e) const { return base(e) + (e == target ? delta : 0.0); }
};

/// Wraps a stream so the solver cannot see its uniform() shortcut.
struct OpaqueStream {
  WeightStream stream;
  double operator()(EdgeId e) const { return stream(e); }
};

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Edges as explicit (from-vertex, to-vertex) 0/1 vectors, built by walking the path.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> vertex_edges(const std::vector<int>& dirs) {
  std::vector<int> v(dirs.size(), 0);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (int d : dirs) {
    auto from = v;
    v[static_cast<std::size_t>(d)] = 1;
    out.emplace_back(from, v);
  }
  return out;
}

/// Shared edges at equal step positions in [first, last), compared as vertex pairs.
inline int vertex_shared(const std::vector<int>& a, const std::vector<int>& b, int first, int last) {
  const auto ea = vertex_edges(a), eb = vertex_edges(b);
  int k = 0;
  for (int i = first; i < last; ++i) k += ea[static_cast<std::size_t>(i)] == eb[static_cast<std::size_t>(i)];
  return k;
}

using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<250>>;

/// 1 - e^{-x} sum_{k<n} x^k / k! in 250 decimal digits.
inline double gamma_cdf_complement_sum(int n, double x) {
  const BigFloat bx = x;
  BigFloat term = 1, sum = 0;
  for (int k = 0; k < n; ++k) {
    sum += term;
    term *= bx / (k + 1);
  }
  return static_cast<double>(BigFloat(1) - boost::multiprecision::exp(-bx) * sum);
}

/// n! P(Gamma(n) <= x) in 250 digits.
inline double factorial_times_cdf(int n, double x) {
  BigFloat fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  const BigFloat bx = x;
  BigFloat term = 1, sum = 0;
  for (int k = 0; k < n; ++k) {
    sum += term;
    term *= bx / (k + 1);
  }
  return static_cast<double>(fact * (BigFloat(1) - boost::multiprecision::exp(-bx) * sum));
}

inline double relative_error(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace hyperfpp::testing
