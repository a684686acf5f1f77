#pragma once

// Brute-force lattice point oracles for simplices: i(P, n), i*(P, n) and the
// integer points of the half-open fundamental parallelepiped Box(P).

#include "flatdelta/exact_linalg.hpp"
#include "flatdelta/polytope.hpp"

#include <stdexcept>
#include <vector>

namespace flatdelta {

class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Upper bound on the number of bounding-box candidates an enumeration may
/// inspect. Exceeding it is an error, never a silent truncation.
struct CountBudget {
  Integer max_candidates = Integer(100000000);
};

struct BoxPoint {
  IntVector point;    // alpha in Z^{d+1}
  RatVector lambdas;  // alpha = sum lambda_i (v_i, 1), 0 <= lambda_i < 1
  unsigned long degree = 0;  // last coordinate of alpha
};

/// |nP ∩ Z^d|; i(P, 0) = 1.
Integer count_lattice_points(const Simplex& s, unsigned long n, const CountBudget& budget = {});

/// |n(P \ ∂P) ∩ Z^d| for n >= 1.
Integer count_interior_points(const Simplex& s, unsigned long n, const CountBudget& budget = {});

/// Box(P), sorted lexicographically by point. Its size is the normalized volume.
std::vector<BoxPoint> box_points(const Simplex& s, const CountBudget& budget = {});

/// ceil(lambda_1 + ... + lambda_d); the degree of a Box point when v_0 = 0.
unsigned long degree_of(const RatVector& lambdas);

}  // namespace flatdelta
