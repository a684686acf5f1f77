#include "flatdelta/lattice_enumeration.hpp"

#include <stdexcept>

namespace flatdelta {

bool BoundedRegion::satisfies(const std::vector<Integer>& y) const {
  for (std::size_t j = 0; j < dim(); ++j)
    if (y[j] < lower[j] || y[j] > upper[j]) return false;
  for (const auto& c : constraints) {
    Integer value = c.offset;
    for (std::size_t j = 0; j < dim(); ++j) value += c.coefficients[j] * y[j];
    if (c.lower && value < *c.lower) return false;
    if (c.upper && value > *c.upper) return false;
  }
  return true;
}

Integer candidate_count(const BoundedRegion& region) {
  Integer total = 1;
  for (std::size_t j = 0; j < region.dim(); ++j) {
    if (region.upper[j] < region.lower[j]) return 0;
    total *= region.upper[j] - region.lower[j] + 1;
  }
  return total;
}

namespace {

class Enumerator {
 public:
  explicit Enumerator(const BoundedRegion& region) : region_(region), m_(region.dim()) {
    for (const auto& c : region_.constraints)
      if (c.coefficients.size() != m_) throw DimensionMismatchError("constraint length differs from region dimension");
    // suffix_min/max[i][j]: range of sum_{j' >= j} a_ij' y_j' over the box.
    const std::size_t nc = region_.constraints.size();
    suffix_min_.assign(nc, std::vector<Integer>(m_ + 1, Integer(0)));
    suffix_max_.assign(nc, std::vector<Integer>(m_ + 1, Integer(0)));
    for (std::size_t i = 0; i < nc; ++i) {
      const auto& a = region_.constraints[i].coefficients;
      for (std::size_t j = m_; j-- > 0;) {
        Integer lo = a[j] * region_.lower[j];
        Integer hi = a[j] * region_.upper[j];
        if (lo > hi) swap(lo, hi);
        suffix_min_[i][j] = suffix_min_[i][j + 1] + lo;
        suffix_max_[i][j] = suffix_max_[i][j + 1] + hi;
      }
    }
    partial_.resize(nc);
    for (std::size_t i = 0; i < nc; ++i) partial_[i] = region_.constraints[i].offset;
    point_.assign(m_, Integer(0));
  }

  Integer count() {
    if (candidate_count(region_) == 0) return 0;
    if (m_ == 0) return region_.satisfies({}) ? 1 : 0;
    Integer total = 0;
    count_level(0, total);
    return total;
  }

  void visit(const std::function<void(const std::vector<Integer>&)>& f) {
    if (candidate_count(region_) == 0) return;
    if (m_ == 0) {
      if (region_.satisfies({})) f(point_);
      return;
    }
    visit_level(0, f);
  }

 private:
  // Feasible range of y_j given the fixed prefix and the box for the rest.
  bool level_range(std::size_t j, Integer& lo, Integer& hi) const {
    lo = region_.lower[j];
    hi = region_.upper[j];
    for (std::size_t i = 0; i < region_.constraints.size(); ++i) {
      const auto& c = region_.constraints[i];
      const Integer& a = c.coefficients[j];
      // need: lower <= partial + a*y + rest <= upper, rest in [smin, smax]
      std::optional<Integer> need_lo, need_hi;  // bounds on a*y
      if (c.lower) need_lo = *c.lower - partial_[i] - suffix_max_[i][j + 1];
      if (c.upper) need_hi = *c.upper - partial_[i] - suffix_min_[i][j + 1];
      if (a == 0) {
        if ((need_lo && sgn(*need_lo) > 0) || (need_hi && sgn(*need_hi) < 0)) return false;
        continue;
      }
      if (a > 0) {
        if (need_lo) lo = std::max(lo, ceil_div(*need_lo, a));
        if (need_hi) hi = std::min(hi, floor_div(*need_hi, a));
      } else {
        if (need_hi) lo = std::max(lo, ceil_div(*need_hi, a));
        if (need_lo) hi = std::min(hi, floor_div(*need_lo, a));
      }
      if (lo > hi) return false;
    }
    return lo <= hi;
  }

  void advance(std::size_t j, const Integer& step) {
    for (std::size_t i = 0; i < partial_.size(); ++i) partial_[i] += region_.constraints[i].coefficients[j] * step;
  }

  void count_level(std::size_t j, Integer& total) {
    Integer lo, hi;
    if (!level_range(j, lo, hi)) return;
    if (j + 1 == m_) {
      total += hi - lo + 1;
      return;
    }
    advance(j, lo);
    for (Integer y = lo; y <= hi; ++y) {
      count_level(j + 1, total);
      advance(j, 1);
    }
    advance(j, -(hi + 1));
  }

  void visit_level(std::size_t j, const std::function<void(const std::vector<Integer>&)>& f) {
    Integer lo, hi;
    if (!level_range(j, lo, hi)) return;
    advance(j, lo);
    for (Integer y = lo; y <= hi; ++y) {
      point_[j] = y;
      if (j + 1 == m_)
        f(point_);
      else
        visit_level(j + 1, f);
      advance(j, 1);
    }
    advance(j, -(hi + 1));
  }

  const BoundedRegion& region_;
  std::size_t m_;
  std::vector<std::vector<Integer>> suffix_min_, suffix_max_;
  std::vector<Integer> partial_;
  std::vector<Integer> point_;
};

}  // namespace

Integer count_points(const BoundedRegion& region) { return Enumerator(region).count(); }

void for_each_point(const BoundedRegion& region, const std::function<void(const std::vector<Integer>&)>& visit) {
  Enumerator(region).visit(visit);
}

}  // namespace flatdelta
