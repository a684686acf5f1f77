#include "flatdelta/polytope.hpp"

#include <algorithm>
#include <string>

namespace flatdelta {

Simplex::Simplex(std::vector<IntVector> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw DimensionMismatchError("a simplex needs at least two vertices");
  dim_ = vertices_.size() - 1;
  for (const auto& v : vertices_)
    if (v.dim() != dim_)
      throw DimensionMismatchError("expected " + std::to_string(dim_ + 1) + " vertices of dimension " +
                                   std::to_string(dim_) + ", got one of dimension " + std::to_string(v.dim()));
  edge_det_ = det_bareiss(edge_matrix());
  if (edge_det_ == 0) throw DegenerateSimplexError("vertices are affinely dependent");
}

IntMatrix Simplex::edge_matrix() const {
  std::vector<IntVector> edges;
  edges.reserve(dim_);
  for (std::size_t i = 1; i <= dim_; ++i) edges.push_back(vertices_[i] - vertices_[0]);
  return IntMatrix::from_columns(edges);
}

Simplex unit_simplex(std::size_t d) {
  if (d == 0) throw DimensionMismatchError("unit simplex needs d >= 1");
  std::vector<IntVector> vertices{IntVector(d)};
  for (std::size_t i = 0; i < d; ++i) vertices.push_back(IntVector::unit(d, i));
  return Simplex(std::move(vertices));
}

Simplex pyramid(const Simplex& s) {
  const std::size_t d = s.dim();
  std::vector<IntVector> vertices;
  vertices.reserve(d + 2);
  for (const auto& v : s.vertices()) {
    std::vector<Integer> lifted(v.begin(), v.end());
    lifted.emplace_back(0);
    vertices.emplace_back(std::move(lifted));
  }
  vertices.push_back(IntVector::unit(d + 1, d));
  return Simplex(std::move(vertices));
}

Integer normalized_volume(const Simplex& s) { return abs(s.edge_determinant()); }

std::optional<RatVector> barycentric(const Simplex& s, const IntVector& x, const Integer& n) {
  if (x.dim() != s.dim()) throw DimensionMismatchError("point dimension differs from simplex dimension");
  RatVector tail = solve_exact(s.edge_matrix(), x - s.vertex(0) * n);
  std::vector<Rational> mu;
  mu.reserve(s.dim() + 1);
  mu.emplace_back(Rational(n) - tail.sum());
  mu.insert(mu.end(), tail.begin(), tail.end());
  if (std::any_of(mu.begin(), mu.end(), [](const Rational& q) { return sgn(q) < 0; })) return std::nullopt;
  return RatVector(std::move(mu));
}

bool strictly_positive(const RatVector& coefficients) {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& q) { return sgn(q) > 0; });
}

}  // namespace flatdelta
