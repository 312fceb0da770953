#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hyperfpp/core.hpp"
#include "hyperfpp/solver_types.hpp"
#include "hyperfpp/weights.hpp"

namespace hyperfpp {

/// Allowed first-step directions (first) and last-step directions (last), as coordinate masks.
struct EndpointSets {
  std::uint64_t first = 0;
  std::uint64_t last = 0;

  static EndpointSets from_lists(const std::vector<int>& first_dirs, const std::vector<int>& last_dirs, int n) {
    EndpointSets s;
    auto fill = [n](const std::vector<int>& dirs, std::uint64_t& mask) {
      for (int d : dirs) {
        if (d < 0 || d >= n) throw ValidationError("endpoint direction " + std::to_string(d) + " out of range");
        mask |= std::uint64_t{1} << d;
      }
    };
    fill(first_dirs, s.first);
    fill(last_dirs, s.last);
    if (s.first & s.last) throw ValidationError("first and last endpoint sets must be disjoint");
    return s;
  }

  int first_size() const noexcept { return std::popcount(first); }
  int last_size() const noexcept { return std::popcount(last); }
};

/// Size of the default blocks: ceil(c * n), guarded against c * n landing a hair above an integer.
inline int default_block_size(int n, double c) {
  if (!(c > 0.0 && c < 1.0)) throw ValidationError("block fraction c must lie in (0, 1)");
  return std::max(1, static_cast<int>(std::ceil(c * n - 1e-9)));
}

/// First block {0, ..., m-1} and last block {n-m, ..., n-1} with m = ceil(c n).
inline EndpointSets default_endpoint_sets(int n, double c) {
  const int m = default_block_size(n, c);
  if (2 * m > n) throw ValidationError("blocks of size ceil(c n) overlap for n=" + std::to_string(n));
  EndpointSets s;
  s.first = full_mask(m);
  s.last = full_mask(n) ^ full_mask(n - m);
  return s;
}

inline void require_enumerable(int n) {
  require_path_dimension(n);
  if (n > kEnumerationCap)
    throw ResourceError("exhaustive enumeration over n! paths is limited to n <= " +
                        std::to_string(kEnumerationCap) + ", got n=" + std::to_string(n));
}

/// Brute-force minimum over all n! permutations in lexicographic order.
/// Independent of the dynamic program; used as its oracle.
template <WeightSource W>
FppResult enumerate_min(int n, const W& w) {
  require_enumerable(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_perm = perm;
  do {
    double sum = 0.0;
    std::uint64_t mask = 0;
    for (int d : perm) {
      sum += static_cast<double>(w(edge_id(mask, d, n)));
      mask |= std::uint64_t{1} << d;
    }
    if (sum < best) {
      best = sum;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, PathPerm(std::move(best_perm))};
}

/// Brute-force minimum of the middle sum over the (n-2)! paths with fixed first and last direction.
template <WeightSource W>
double enumerate_middle_min(int n, const MiddleConstraint& c, const W& w) {
  require_enumerable(n);
  require_middle_constraint(c, n);
  std::vector<int> inner;
  for (int d = 0; d < n; ++d)
    if (d != c.first_dir && d != c.last_dir) inner.push_back(d);
  double best = std::numeric_limits<double>::infinity();
  do {
    double sum = 0.0;
    std::uint64_t mask = std::uint64_t{1} << c.first_dir;
    for (int d : inner) {
      sum += static_cast<double>(w(edge_id(mask, d, n)));
      mask |= std::uint64_t{1} << d;
    }
    best = std::min(best, sum);
  } while (std::next_permutation(inner.begin(), inner.end()));
  return best;
}

namespace detail {

template <WeightSource W>
std::vector<double> weight_table(int n, const W& w) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<double> table(size * static_cast<std::uint64_t>(n));
  for (std::uint64_t mask = 0; mask < size; ++mask)
    for (int d = 0; d < n; ++d)
      if (!((mask >> d) & 1u)) table[edge_id(mask, d, n).value] = static_cast<double>(w(edge_id(mask, d, n)));
  return table;
}

class PathCounter {
 public:
  PathCounter(int n, std::vector<double> table, double x) : n_(n), table_(std::move(table)), x_(x) {}

  // Paths with total weight <= x. Prefix sums never decrease, so a prefix above x is cut.
  std::uint64_t all(std::uint64_t mask, int step, double sum) const {
    if (step == n_) return 1;
    std::uint64_t count = 0;
    for (std::uint64_t free = full_mask(n_) & ~mask; free != 0; free &= free - 1) {
      const int v = std::countr_zero(free);
      const double s = sum + table_[edge_id(mask, v, n_).value];
      if (s <= x_) count += all(mask | (std::uint64_t{1} << v), step + 1, s);
    }
    return count;
  }

  // Middle steps only; the final free direction must belong to `last`.
  std::uint64_t middle(std::uint64_t mask, int step, double sum, std::uint64_t last) const {
    if (step == n_ - 1) return (full_mask(n_) & ~mask & last) != 0 ? 1 : 0;
    std::uint64_t count = 0;
    const std::uint64_t open = full_mask(n_) & ~mask;
    for (std::uint64_t free = open; free != 0; free &= free - 1) {
      const int v = std::countr_zero(free);
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((open & ~bit & last) == 0) continue;  // nothing admissible left for the last step
      const double s = sum + table_[edge_id(mask, v, n_).value];
      if (s <= x_) count += middle(mask | bit, step + 1, s, last);
    }
    return count;
  }

 private:
  int n_;
  std::vector<double> table_;
  double x_;
};

}  // namespace detail

/// Without endpoint sets: #{pi : X_pi <= x}.
/// With endpoint sets: #{pi : pi_1 in first, pi_n in last, middle sum <= x}.
template <WeightSource W>
std::uint64_t enumerate_counts(int n, const W& w, double x, const std::optional<EndpointSets>& ends = std::nullopt) {
  require_enumerable(n);
  if (std::isnan(x)) throw ValidationError("threshold must not be NaN");
  if (ends && ((ends->first | ends->last) & ~full_mask(n)))
    throw ValidationError("endpoint sets reference directions >= n");
  if (ends && (ends->first & ends->last)) throw ValidationError("first and last endpoint sets must be disjoint");
  if (!ends && x <= 0.0) return 0;
  const detail::PathCounter counter(n, detail::weight_table(n, w), x);
  if (!ends) return counter.all(0, 0, 0.0);
  if (x < 0.0) return 0;
  std::uint64_t count = 0;
  for (std::uint64_t first = ends->first; first != 0; first &= first - 1) {
    const std::uint64_t bit = first & (~first + 1);
    count += counter.middle(bit, 1, 0.0, ends->last);
  }
  return count;
}

}  // namespace hyperfpp
