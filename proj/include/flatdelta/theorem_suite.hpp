#pragma once

// Polytope pairs and families whose Ehrhart polynomials agree on the first
// dilations and then split, verified purely by lattice-point counting.

#include "flatdelta/counting.hpp"
#include "flatdelta/polytope.hpp"

#include <string>
#include <vector>

namespace flatdelta {

enum class Quantity { Count, Interior };

std::string_view to_string(Quantity q);

struct CountComparison {
  unsigned long dilation = 0;
  Quantity quantity = Quantity::Count;
  Integer value_p;
  Integer value_q;
};

struct ReportParams {
  std::size_t d = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<unsigned long> a_values;
};

struct VerificationReport {
  std::string theorem;
  ReportParams params;
  /// Dilations where equality is required, with both counted values (equal
  /// when the check holds).
  std::vector<CountComparison> agreements;
  /// The two dilations (k+1 for i, l+1 for i*) where a strict difference is required.
  std::vector<CountComparison> first_divergence;
  /// Per-pair reports of a family verification.
  std::vector<VerificationReport> pairs;
  bool passed = false;
};

struct SimplexPair {
  Simplex p;
  Simplex q;
};

/// P with delta (1, a^k, 0^(d-k)) (the unit simplex when k = 0) and Q with
/// delta (1, a^(d-l), 0^l). Requires d >= 1, k + l <= d - 1, a >= 1.
SimplexPair theorem2_pair(std::size_t d, std::size_t k, std::size_t l, unsigned long a,
                          const CountBudget& budget = {});

/// P_1..P_count with delta(P_j) = (1, 0^k, j^(d-k-l), 0^l).
/// Requires 0 <= k <= l <= d - k - 1 and count >= 2.
std::vector<Simplex> theorem3_family(std::size_t d, std::size_t k, std::size_t l, std::size_t count,
                                     const CountBudget& budget = {});

/// Counts i(P,t) = i(Q,t) for t = 1..k, i*(P,t) = i*(Q,t) for t = 1..l, and
/// strict differences i(P,k+1) != i(Q,k+1), i*(P,l+1) != i*(Q,l+1).
VerificationReport verify_pair(const Simplex& p, const Simplex& q, std::size_t k, std::size_t l,
                               const CountBudget& budget = {});

/// verify_pair on every unordered pair of the family.
VerificationReport verify_family(const std::vector<Simplex>& family, std::size_t k, std::size_t l,
                                 const CountBudget& budget = {});

}  // namespace flatdelta
