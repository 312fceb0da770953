#pragma once

#include <cstdint>
#include <string>

#include "hyperfpp/core.hpp"

namespace hyperfpp {

inline constexpr int kDefaultDimensionCap = 24;
inline constexpr int kEnumerationCap = 11;

/// Minimum path weight together with one minimizing path.
struct FppResult {
  double min_weight = 0.0;
  PathPerm argmin;
};

/// Fixes the first and last step directions of admissible paths.
struct MiddleConstraint {
  int first_dir = 0;
  int last_dir = 1;
};

inline void require_middle_constraint(const MiddleConstraint& c, int n) {
  if (c.first_dir < 0 || c.first_dir >= n || c.last_dir < 0 || c.last_dir >= n)
    throw ValidationError("middle constraint directions must lie in [0, n)");
  if (c.first_dir == c.last_dir) throw ValidationError("middle constraint needs distinct first and last directions");
}

}  // namespace hyperfpp
