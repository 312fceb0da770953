#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hyperfpp/core.hpp"

namespace hyperfpp {

inline constexpr int kFnkCap = 10;

/// Exact overlap counts against a reference path.
/// f[k]: paths sharing exactly k of the middle edges (k = 0..n-2).
/// f1[k]: paths sharing exactly k edges in total (k = 0..n).
struct FnkTable {
  int n = 0;
  std::vector<std::uint64_t> f;
  std::vector<std::uint64_t> f1;
};

namespace detail {

inline void require_fnk_dimension(int n) {
  if (n < 3) throw DomainError("overlap tables need n >= 3");
  if (n > kFnkCap) throw ResourceError("overlap tables enumerate n! paths; n <= " + std::to_string(kFnkCap));
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("exact count exceeds 64 bits");
  return r;
}

inline std::uint64_t factorial(int m) {
  std::uint64_t r = 1;
  for (int i = 2; i <= m; ++i) r = checked_mul(r, static_cast<std::uint64_t>(i));
  return r;
}

inline std::uint64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = checked_mul(r, static_cast<std::uint64_t>(m - k + i)) / static_cast<std::uint64_t>(i);
  return r;
}

template <class Visit>
void for_each_permutation(int n, Visit&& visit) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    visit(std::span<const int>(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

/// Overlap table against an arbitrary reference path, by enumerating all n! paths.
inline FnkTable count_fnk_against(const PathPerm& reference) {
  const int n = reference.dimension();
  detail::require_fnk_dimension(n);
  FnkTable t{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n - 1)),
             std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1))};
  const auto ref = reference.directions();
  detail::for_each_permutation(n, [&](std::span<const int> p) {
    const int middle = detail::shared_steps(p, ref, 1, n - 1);
    const int total = detail::shared_steps(p, ref, 0, n);
    ++t.f[static_cast<std::size_t>(middle)];
    ++t.f1[static_cast<std::size_t>(total)];
  });
  return t;
}

/// Overlap table against the identity path 0 1 ... n-1.
inline FnkTable count_fnk(int n) {
  detail::require_fnk_dimension(n);
  return count_fnk_against(PathPerm::identity(n));
}

/// n - 5e (n+3)^{2/3}: the overlap level separating the moderate and extreme regimes.
inline double ne(double n) { return n - 5.0 * std::exp(1.0) * std::pow(n + 3.0, 2.0 / 3.0); }

/// A bound value that only holds for n large enough, with the regime it was evaluated in.
struct RegimeValue {
  double value = 0.0;
  bool in_regime = false;
};

/// Worst-case count binom(n-2, k) (n-k-1)! = (n-2)! (n-k-1) / k!, exact.
inline std::uint64_t fnk_bound_iii(int n, int k) {
  if (k < 1 || k > n - 2) throw DomainError("bound iii needs 1 <= k <= n-2");
  return detail::checked_mul(detail::binomial(n - 2, k), detail::factorial(n - k - 1));
}

inline double fnk_bound_iii_log(double n, double k) {
  if (k < 1.0 || k > n - 2.0) throw DomainError("bound iii needs 1 <= k <= n-2");
  return std::lgamma(n - 1.0) + std::log(n - k - 1.0) - std::lgamma(k + 1.0);
}

/// log of 2 n^6 (n-k)!; in regime when k + 2 <= ne(n).
inline RegimeValue fnk_bound_ii_log(double n, double k) {
  if (k < 0.0 || k > n) throw DomainError("bound ii needs 0 <= k <= n");
  return {std::log(2.0) + 6.0 * std::log(n) + std::lgamma(n - k + 1.0), k + 2.0 <= ne(n)};
}

/// log of (k+1)(n-k-1)!, the leading term of the small-overlap bound; in regime for k <= n^{1/4}.
inline RegimeValue fnk_bound_i_log(double n, double k) {
  if (k < 0.0 || k > n - 1.0) throw DomainError("bound i needs 0 <= k <= n-1");
  return {std::log(k + 1.0) + std::lgamma(n - k), k <= std::pow(n, 0.25)};
}

/// log of [(3k)^2 (n-2) / (n-4k)^3]^k.
inline double fnk_bracket_i_log(double n, double k) {
  if (!(4.0 * k < n)) throw DomainError("bracket needs 4k < n");
  if (k == 0.0) return 0.0;
  return k * (2.0 * std::log(3.0 * k) + std::log(n - 2.0) - 3.0 * std::log(n - 4.0 * k));
}

inline double fnk_bracket_i(double n, double k) { return std::exp(fnk_bracket_i_log(n, k)); }

// Shared-edge positions and the gap product bounding the number of paths with them.

/// 1-based middle steps at which `path` uses the same edge as the identity path.
inline std::vector<int> shared_positions(const PathPerm& path) {
  const int n = path.dimension();
  std::vector<int> r;
  std::uint64_t mask = 0;
  for (int i = 0; i < n; ++i) {
    const int d = path[static_cast<std::size_t>(i)];
    if (i >= 1 && i <= n - 2 && d == i && mask == full_mask(i)) r.push_back(i + 1);
    mask |= std::uint64_t{1} << d;
  }
  return r;
}

/// Gap lengths s_i - 1 between consecutive shared positions, with sentinels 0 and n+1.
inline std::vector<int> position_gaps(const std::vector<int>& r, int n) {
  std::vector<int> gaps;
  int prev = 0;
  for (int pos : r) {
    gaps.push_back(pos - prev - 1);
    prev = pos;
  }
  gaps.push_back(n + 1 - prev - 1);
  return gaps;
}

/// G(r) = prod (s_i - 1)!.
inline std::uint64_t gap_factorial_product(const std::vector<int>& r, int n) {
  std::uint64_t g = 1;
  for (int gap : position_gaps(r, n)) g = detail::checked_mul(g, detail::factorial(gap));
  return g;
}

/// j(r) = max_i (s_i - 1).
inline int max_gap(const std::vector<int>& r, int n) {
  const auto gaps = position_gaps(r, n);
  return *std::max_element(gaps.begin(), gaps.end());
}

/// f(n,k) split by whether the largest gap is below n - 4k.
struct GapSplit {
  int n = 0;
  std::vector<std::uint64_t> small_gap;  // j(r) <  n - 4k
  std::vector<std::uint64_t> large_gap;  // j(r) >= n - 4k
};

inline GapSplit count_fnk_by_gap(int n) {
  detail::require_fnk_dimension(n);
  GapSplit s{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n - 1)),
             std::vector<std::uint64_t>(static_cast<std::size_t>(n - 1))};
  detail::for_each_permutation(n, [&](std::span<const int> p) {
    const auto r = shared_positions(PathPerm(std::vector<int>(p.begin(), p.end())));
    const int k = static_cast<int>(r.size());
    if (max_gap(r, n) < n - 4 * k)
      ++s.small_gap[static_cast<std::size_t>(k)];
    else
      ++s.large_gap[static_cast<std::size_t>(k)];
  });
  return s;
}

/// C(r): number of paths per shared-position sequence r.
inline std::map<std::vector<int>, std::uint64_t> shared_position_census(int n) {
  detail::require_fnk_dimension(n);
  std::map<std::vector<int>, std::uint64_t> census;
  detail::for_each_permutation(
      n, [&](std::span<const int> p) { ++census[shared_positions(PathPerm(std::vector<int>(p.begin(), p.end())))]; });
  return census;
}

}  // namespace hyperfpp
