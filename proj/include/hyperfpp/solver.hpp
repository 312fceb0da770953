#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <vector>

#include "hyperfpp/core.hpp"
#include "hyperfpp/parallel.hpp"
#include "hyperfpp/solver_types.hpp"
#include "hyperfpp/weights.hpp"

namespace hyperfpp {

/// Bytes the full dynamic program needs at dimension n: one double and one back-pointer per mask.
constexpr double dp_memory_bytes(int n) noexcept {
  return std::ldexp(1.0, n) * static_cast<double>(sizeof(double) + sizeof(std::uint8_t));
}

inline void require_dp_dimension(int n, int cap) {
  require_path_dimension(n);
  if (n > cap) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "n=%d exceeds the dimension cap %d; the dynamic program needs %.1f MiB", n, cap,
                  dp_memory_bytes(n) / (1024.0 * 1024.0));
    throw ResourceError(buf);
  }
}

/// Exact minimum over all n! monotone paths.
///
/// best[S] is the cheapest way to reach mask S; best[S] = min_v best[S \ v] + w(S \ v, v).
/// Masks are visited in increasing numeric order, which is a topological order of the
/// hypercube DAG, so each edge weight is evaluated exactly once. Sums accumulate in
/// path order, so the result is bitwise equal to a left-to-right sum over the argmin.
template <WeightSource W>
FppResult min_path(int n, const W& w, int cap = kDefaultDimensionCap) {
  require_dp_dimension(n, cap);
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<double> best(size);
  std::vector<std::uint8_t> last(size);
  best[0] = 0.0;
  for (std::uint64_t s = 1; s < size; ++s) {
    double b = std::numeric_limits<double>::infinity();
    int arg = 0;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint64_t prev = s ^ (std::uint64_t{1} << v);
      const double c = best[prev] + static_cast<double>(w(edge_id(prev, v, n)));
      if (c < b) {
        b = c;
        arg = v;
      }
    }
    best[s] = b;
    last[s] = static_cast<std::uint8_t>(arg);
  }

  std::vector<int> dirs(static_cast<std::size_t>(n));
  std::uint64_t s = size - 1;
  for (int i = n - 1; i >= 0; --i) {
    const int v = last[s];
    dirs[static_cast<std::size_t>(i)] = v;
    s ^= std::uint64_t{1} << v;
  }
  return {best[size - 1], PathPerm(std::move(dirs))};
}

/// Cheapest middle section (steps 2..n-1) among paths that start along
/// c.first_dir and finish along c.last_dir. The first and last edge weights
/// are not part of the objective. For n = 2 the middle is empty and the result is 0.
template <WeightSource W>
double min_middle(int n, const MiddleConstraint& c, const W& w, int cap = kDefaultDimensionCap) {
  require_dp_dimension(n, cap);
  require_middle_constraint(c, n);
  const std::uint64_t a = std::uint64_t{1} << c.first_dir;
  const std::uint64_t b = std::uint64_t{1} << c.last_dir;
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t target = (size - 1) ^ b;

  std::vector<double> best(size, std::numeric_limits<double>::infinity());
  best[a] = 0.0;
  for (std::uint64_t s = a + 1; s <= target; ++s) {
    if (!(s & a) || (s & b)) continue;
    double m = std::numeric_limits<double>::infinity();
    for (std::uint64_t rest = s & ~a; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint64_t prev = s ^ (std::uint64_t{1} << v);
      m = std::min(m, best[prev] + static_cast<double>(w(edge_id(prev, v, n))));
    }
    best[s] = m;
  }
  return best[target];
}

/// Returns m_n when m_n <= x and nothing otherwise.
///
/// Exact: only prefixes whose cost already exceeds x are discarded, and a
/// prefix cost never decreases along a path. Whenever it returns a value, that
/// value equals min_path(n, w).min_weight bit for bit.
template <WeightSource W>
std::optional<double> min_path_below(int n, const W& w, double x) {
  require_path_dimension(n);
  struct Node {
    std::uint64_t mask;
    double cost;
  };
  if (!(x >= 0.0)) return std::nullopt;
  std::vector<Node> layer{{0, 0.0}};
  std::vector<Node> next;
  const std::uint64_t full = full_mask(n);
  for (int step = 0; step < n; ++step) {
    next.clear();
    for (const Node& node : layer) {
      [[maybe_unused]] double u_floor = 0.0;
      if constexpr (UniformBackedSource<W>) u_floor = std::exp(node.cost - x) * (1.0 - 1e-12);
      for (std::uint64_t free = full & ~node.mask; free != 0; free &= free - 1) {
        const int v = std::countr_zero(free);
        const EdgeId e = edge_id(node.mask, v, n);
        if constexpr (UniformBackedSource<W>) {
          if (w.uniform(e) < u_floor) continue;
        }
        const double c = node.cost + static_cast<double>(w(e));
        if (c <= x) next.push_back({node.mask | (std::uint64_t{1} << v), c});
      }
    }
    if (next.empty()) return std::nullopt;
    std::sort(next.begin(), next.end(),
              [](const Node& l, const Node& r) { return l.mask != r.mask ? l.mask < r.mask : l.cost < r.cost; });
    layer.clear();
    for (const Node& node : next)
      if (layer.empty() || layer.back().mask != node.mask) layer.push_back(node);
  }
  return layer.front().cost;
}

/// One exact minimum per replica; replica r uses derive_replica(seed, r).
/// Output order is by replica and does not depend on `threads`.
inline std::vector<FppResult> sample_paths(int n, Seed seed, std::size_t reps, unsigned threads = 1,
                                           int cap = kDefaultDimensionCap) {
  if (reps == 0) throw ValidationError("reps must be at least 1");
  require_dp_dimension(n, cap);
  std::vector<FppResult> out(reps);
  parallel_for(reps, threads, [&](std::size_t r) { out[r] = min_path(n, derive_replica(seed, r), cap); });
  return out;
}

inline std::vector<double> sample_min(int n, Seed seed, std::size_t reps, unsigned threads = 1,
                                      int cap = kDefaultDimensionCap) {
  const auto paths = sample_paths(n, seed, reps, threads, cap);
  std::vector<double> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(p.min_weight);
  return out;
}

/// Indicator samples of {m_n <= x}, one per replica, via the pruned search.
inline std::vector<std::uint8_t> sample_below(int n, Seed seed, std::size_t reps, double x, unsigned threads = 1) {
  if (reps == 0) throw ValidationError("reps must be at least 1");
  std::vector<std::uint8_t> out(reps);
  parallel_for(reps, threads,
               [&](std::size_t r) { out[r] = min_path_below(n, derive_replica(seed, r), x).has_value(); });
  return out;
}

}  // namespace hyperfpp
