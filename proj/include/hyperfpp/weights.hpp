#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>

#include "hyperfpp/core.hpp"

namespace hyperfpp {

/// Anything that maps an edge id to a positive weight.
template <class W>
concept WeightSource = requires(const W& w, EdgeId e) {
  { w(e) } -> std::convertible_to<double>;
};

/// Weight sources whose weight is -log(u) of an exposed uniform; lets callers
/// reject expensive edges before paying for the logarithm.
template <class W>
concept UniformBackedSource = WeightSource<W> && requires(const W& w, EdgeId e) {
  { w.uniform(e) } -> std::convertible_to<double>;
};

namespace detail {

inline constexpr std::uint64_t kReplicaMultiplier = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kEdgeMultiplier = 0xD6E8FEB86659FD93ull;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

}  // namespace detail

struct Seed {
  std::uint64_t value = 0;
};

/// Stateless Exp(1) weights keyed by (seed, replica). The bit pipeline is part
/// of the output contract; changing any constant changes every result file.
class WeightStream {
 public:
  constexpr WeightStream() = default;
  constexpr WeightStream(Seed seed, std::uint64_t replica) noexcept
      : seed_(seed.value), replica_(replica), key_(seed.value ^ (replica * detail::kReplicaMultiplier)) {}

  constexpr std::uint64_t seed() const noexcept { return seed_; }
  constexpr std::uint64_t replica() const noexcept { return replica_; }

  /// u in (0, 1), never 0 or 1.
  constexpr double uniform(EdgeId e) const noexcept {
    const std::uint64_t z = detail::mix64(key_ ^ (e.value * detail::kEdgeMultiplier));
    return (static_cast<double>(z >> 11) + 0.5) * 0x1.0p-53;
  }

  double operator()(EdgeId e) const noexcept { return -std::log(uniform(e)); }
  double weight(EdgeId e) const noexcept { return (*this)(e); }

  friend constexpr bool operator==(const WeightStream& a, const WeightStream& b) noexcept {
    return a.key_ == b.key_ && a.seed_ == b.seed_ && a.replica_ == b.replica_;
  }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t replica_ = 0;
  std::uint64_t key_ = 0;
};

inline double edge_weight(const WeightStream& stream, EdgeId e) noexcept { return stream(e); }

/// Replica streams are injective in the index: the multiplier is odd.
constexpr WeightStream derive_replica(Seed seed, std::uint64_t replica) noexcept { return {seed, replica}; }

}  // namespace hyperfpp
