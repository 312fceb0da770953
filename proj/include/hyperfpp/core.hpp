#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hyperfpp/errors.hpp"

namespace hyperfpp {

// Coordinates are 0-based. Masks are 64-bit, so every routine here assumes n <= 63.
inline constexpr int kMaxMaskDimension = 63;

struct VertexMask {
  std::uint64_t bits = 0;

  constexpr bool contains(int coord) const noexcept { return (bits >> coord) & 1u; }
  constexpr int steps() const noexcept { return std::popcount(bits); }
  friend constexpr bool operator==(VertexMask, VertexMask) = default;
};

constexpr std::uint64_t full_mask(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

struct EdgeId {
  std::uint64_t value = 0;
  friend constexpr bool operator==(EdgeId, EdgeId) = default;
  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

/// Upward edge leaving `tail` along coordinate `dir` (bit `dir` of tail is clear).
struct OrientedEdge {
  VertexMask tail;
  int dir = 0;

  constexpr VertexMask head() const noexcept { return {tail.bits | (std::uint64_t{1} << dir)}; }
  friend constexpr bool operator==(OrientedEdge, OrientedEdge) = default;
};

/// Stable index used to look weights up: tail * n + dir.
constexpr EdgeId edge_id(std::uint64_t tail_bits, int dir, int n) noexcept {
  return {tail_bits * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(dir)};
}

constexpr EdgeId edge_id(const OrientedEdge& e, int n) noexcept { return edge_id(e.tail.bits, e.dir, n); }

inline void require_path_dimension(int n) {
  if (n < 2 || n > kMaxMaskDimension)
    throw ValidationError("dimension must lie in [2, 63], got " + std::to_string(n));
}

/// A monotone path from 0 to 1, stored as the sequence of coordinate directions.
class PathPerm {
 public:
  PathPerm() = default;

  explicit PathPerm(std::vector<int> directions) : dirs_(std::move(directions)) { validate(); }
  PathPerm(std::initializer_list<int> directions) : dirs_(directions) { validate(); }

  static PathPerm identity(int n) {
    require_path_dimension(n);
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = i;
    return PathPerm(std::move(d));
  }

  int dimension() const noexcept { return static_cast<int>(dirs_.size()); }
  std::span<const int> directions() const noexcept { return dirs_; }
  int operator[](std::size_t step) const noexcept { return dirs_[step]; }
  int front() const noexcept { return dirs_.front(); }
  int back() const noexcept { return dirs_.back(); }

  friend bool operator==(const PathPerm&, const PathPerm&) = default;

 private:
  void validate() const {
    const int n = static_cast<int>(dirs_.size());
    require_path_dimension(n);
    std::uint64_t seen = 0;
    for (int d : dirs_) {
      if (d < 0 || d >= n) throw ValidationError("direction " + std::to_string(d) + " out of range");
      const std::uint64_t bit = std::uint64_t{1} << d;
      if (seen & bit) throw ValidationError("direction " + std::to_string(d) + " repeated");
      seen |= bit;
    }
  }

  std::vector<int> dirs_;
};

inline void require_dimension_match(const PathPerm& p, int n) {
  if (p.dimension() != n)
    throw ValidationError("path has " + std::to_string(p.dimension()) + " steps, expected " + std::to_string(n));
}

/// Edge i has tail {pi_0..pi_{i-1}} and direction pi_i.
inline std::vector<OrientedEdge> path_edges(const PathPerm& path, int n) {
  require_dimension_match(path, n);
  std::vector<OrientedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  std::uint64_t mask = 0;
  for (int d : path.directions()) {
    edges.push_back({VertexMask{mask}, d});
    mask |= std::uint64_t{1} << d;
  }
  return edges;
}

namespace detail {

// Counts steps i in [first, last) where both paths traverse the same edge.
// Two step-i edges coincide iff the directions agree and the prefix sets agree.
inline int shared_steps(std::span<const int> a, std::span<const int> b, int first, int last) noexcept {
  std::uint64_t ma = 0, mb = 0;
  int shared = 0;
  for (int i = 0; i < last; ++i) {
    if (i >= first && a[i] == b[i] && ma == mb) ++shared;
    ma |= std::uint64_t{1} << a[i];
    mb |= std::uint64_t{1} << b[i];
  }
  return shared;
}

}  // namespace detail

/// Number of shared edges among steps 2..n-1 (1-based); first and last step excluded.
inline int shared_middle_edges(const PathPerm& a, const PathPerm& b, int n) {
  require_dimension_match(a, n);
  require_dimension_match(b, n);
  if (n < 3) throw DomainError("shared_middle_edges needs n >= 3 (no middle edges)");
  return detail::shared_steps(a.directions(), b.directions(), 1, n - 1);
}

inline int shared_total_edges(const PathPerm& a, const PathPerm& b, int n) {
  require_dimension_match(a, n);
  require_dimension_match(b, n);
  return detail::shared_steps(a.directions(), b.directions(), 0, n);
}

/// Weight of a path, summed left to right along the steps.
template <class Weights>
double path_weight(const PathPerm& path, const Weights& w) {
  const int n = path.dimension();
  double sum = 0.0;
  std::uint64_t mask = 0;
  for (int d : path.directions()) {
    sum += w(edge_id(mask, d, n));
    mask |= std::uint64_t{1} << d;
  }
  return sum;
}

/// 1-based, space separated, the way paths are written in output files.
inline std::string format_path(const PathPerm& path) {
  std::string out;
  for (int d : path.directions()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(d + 1);
  }
  return out;
}

}  // namespace hyperfpp
