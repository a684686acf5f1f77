#pragma once

// Integer points of a box cut by two-sided integer linear constraints.
// Shared engine behind lattice-point counting and Box enumeration.

#include "flatdelta/exact_linalg.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace flatdelta {

/// lower <= coefficients . y + offset <= upper (absent bound = unbounded).
struct LinearConstraint {
  std::vector<Integer> coefficients;
  Integer offset = 0;
  std::optional<Integer> lower;
  std::optional<Integer> upper;
};

struct BoundedRegion {
  std::vector<Integer> lower;  // per-coordinate box, inclusive
  std::vector<Integer> upper;
  std::vector<LinearConstraint> constraints;

  std::size_t dim() const { return lower.size(); }
  bool satisfies(const std::vector<Integer>& y) const;
};

/// Number of integer points of the bounding box (0 when the box is empty).
Integer candidate_count(const BoundedRegion& region);

/// Exact number of integer points of the region. The innermost coordinate is
/// resolved as an interval, outer coordinates are pruned by interval bounds
/// on the remaining box.
Integer count_points(const BoundedRegion& region);

/// Visits every integer point of the region in lexicographic order.
void for_each_point(const BoundedRegion& region, const std::function<void(const std::vector<Integer>&)>& visit);

}  // namespace flatdelta
