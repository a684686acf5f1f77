#pragma once

// Explicit simplices realizing flat delta-vectors, the closed-form degree
// profiles of their Box points, and the realizability criterion k <= l.

#include "flatdelta/counting.hpp"
#include "flatdelta/ehrhart.hpp"
#include "flatdelta/polytope.hpp"

#include <stdexcept>
#include <string_view>
#include <utility>

namespace flatdelta {

class NotRealizableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// How construct_flat assembled a simplex: a core simplex of dimension
/// base_dim followed by `pyramids` pyramid steps.
struct ConstructionRecipe {
  enum class Kind { Even, Full, UnitPoint };
  Kind kind = Kind::UnitPoint;
  std::size_t base_dim = 1;
  std::size_t k = 0;
  unsigned long a = 1;
  std::size_t pyramids = 0;

  friend bool operator==(const ConstructionRecipe&, const ConstructionRecipe&) = default;
};

std::string_view to_string(ConstructionRecipe::Kind kind);

/// v_0 = 0, v_i = e_i (i < d), v_d = sum_{j<=d-k} e_j + a(d-2k) sum_{d-k<j<d} e_j + (a(d-2k)+1) e_d.
/// delta = (1, 0^k, a^(d-2k), 0^k). Requires d >= 3, 1 <= k <= (d-1)/2, a >= 1.
Simplex construct_even(std::size_t d, std::size_t k, unsigned long a);

/// v_0 = 0, v_i = e_i (i < d), v_d = ad sum_{j<d} e_j + (ad+1) e_d. delta = (1, a, ..., a).
Simplex construct_full(std::size_t d, unsigned long a);

/// Delta-vector of construct_even from the ceilings of
/// f(t) = d - k - t(d-2k)/(a(d-2k)+1), t = 1..a(d-2k). No enumeration.
DeltaVector degree_profile_even(std::size_t d, std::size_t k, unsigned long a);

/// Delta-vector of construct_full from the ceilings of f(t) = dt/(ad+1), t = 1..ad.
DeltaVector degree_profile_full(std::size_t d, unsigned long a);

/// A flat pattern is the delta-vector of some lattice polytope iff k <= l.
bool is_realizable(const FlatSpec& spec);

/// Simplex with delta-vector flat_pattern(spec): for k = 0 a full core of
/// dimension d - l plus l pyramids, for k >= 1 an even core of dimension
/// d - l + k plus l - k pyramids. The result is re-checked by counting.
/// Throws NotRealizableError when k > l.
std::pair<Simplex, ConstructionRecipe> construct_flat(const FlatSpec& spec, const CountBudget& budget = {});

}  // namespace flatdelta
