#pragma once

// Delta-vectors (h*-vectors), Ehrhart polynomials in the binomial basis,
// reciprocity and the classical inequalities on delta-vectors.

#include "flatdelta/counting.hpp"
#include "flatdelta/exact_linalg.hpp"
#include "flatdelta/polytope.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatdelta {

class InvalidDeltaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a count sequence cannot come from a lattice polytope.
class NotEhrhartError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidParamsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (delta_0, ..., delta_d) with delta_0 = 1 and all entries nonnegative.
class DeltaVector {
 public:
  /// Throws InvalidDeltaError when the entries violate the invariants.
  explicit DeltaVector(std::vector<Integer> entries);
  DeltaVector(std::initializer_list<long> entries);

  std::size_t dim() const { return entries_.size() - 1; }
  const std::vector<Integer>& entries() const { return entries_; }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }

  /// max{i : delta_i != 0}
  std::size_t degree() const;
  Integer normalized_volume() const;

  friend bool operator==(const DeltaVector& a, const DeltaVector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Integer> entries_;
};

/// Flat pattern (1, 0^k, a^(d-k-l), 0^l).
struct FlatSpec {
  std::size_t d = 1;
  std::size_t k = 0;
  std::size_t l = 0;
  unsigned long a = 1;

  /// Throws InvalidParamsError unless d >= 1, k + l <= d - 1 and a >= 1.
  void validate() const;
  friend bool operator==(const FlatSpec&, const FlatSpec&) = default;
};

DeltaVector flat_pattern(const FlatSpec& spec);

/// delta_j = sum_{i<=j} (-1)^i C(d+1, i) counts[j-i] from counts i(P,0..d).
DeltaVector delta_from_counts(std::span<const Integer> counts);

/// Counts i(P, 0..d) by brute force and converts them.
DeltaVector delta_by_counting(const Simplex& s, const CountBudget& budget = {});

/// delta_i = number of Box points of degree i.
DeltaVector delta_from_box(const Simplex& s, const CountBudget& budget = {});

/// i(P, n) = sum_j delta_j C(n + d - j, d), for any integer n.
Integer ehrhart_eval(const DeltaVector& delta, const Integer& n);

/// i*(P, n) = (-1)^d i(P, -n) for n >= 1.
Integer interior_eval(const DeltaVector& delta, const Integer& n);

struct InequalityCheck {
  bool holds = true;
  std::optional<std::size_t> violated_at;  // smallest violating i
};

/// delta_0 + ... + delta_i <= delta_s + ... + delta_{s-i}, 0 <= i <= floor(s/2).
InequalityCheck check_stanley_ineq(const DeltaVector& delta);

/// delta_d + ... + delta_{d-i} <= delta_1 + ... + delta_{i+1}, 0 <= i <= floor((d-1)/2).
InequalityCheck check_hibi_ineq(const DeltaVector& delta);

/// The flat parameters of delta, if it has the shape (1, 0^k, a^m, 0^l) with
/// m >= 1. (1, 0, ..., 0) is not flat.
std::optional<FlatSpec> classify_flat(const DeltaVector& delta);

std::string to_string(const DeltaVector& delta);

}  // namespace flatdelta
