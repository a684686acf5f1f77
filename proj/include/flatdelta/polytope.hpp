#pragma once

#include "flatdelta/exact_linalg.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace flatdelta {

class DegenerateSimplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A full-dimensional lattice simplex conv(v_0, ..., v_d) in R^d.
/// Immutable once constructed; construction validates the vertex count,
/// the common dimension and the nonvanishing edge determinant.
class Simplex {
 public:
  /// Throws DimensionMismatchError or DegenerateSimplexError.
  explicit Simplex(std::vector<IntVector> vertices);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const IntVector& vertex(std::size_t i) const { return vertices_[i]; }

  /// Columns v_1 - v_0, ..., v_d - v_0.
  IntMatrix edge_matrix() const;
  /// det(edge_matrix()), signed.
  const Integer& edge_determinant() const { return edge_det_; }

  friend bool operator==(const Simplex& a, const Simplex& b) { return a.vertices_ == b.vertices_; }

 private:
  std::size_t dim_;
  std::vector<IntVector> vertices_;
  Integer edge_det_;
};

/// conv(0, e_1, ..., e_d).
Simplex unit_simplex(std::size_t d);

/// Pyramid over s x {0} with apex (0, ..., 0, 1); its delta-vector is
/// delta(s) with a zero appended.
Simplex pyramid(const Simplex& s);

/// |det(v_1 - v_0, ..., v_d - v_0)|.
Integer normalized_volume(const Simplex& s);

/// Coefficients mu_0..mu_d with x = sum mu_i v_i and sum mu_i = n, if x lies
/// in the dilation nP; std::nullopt otherwise.
std::optional<RatVector> barycentric(const Simplex& s, const IntVector& x, const Integer& n);

/// True when every coefficient is strictly positive (x in the relative interior).
bool strictly_positive(const RatVector& coefficients);

}  // namespace flatdelta
