#include "flatdelta/counting.hpp"

#include "flatdelta/lattice_enumeration.hpp"
#include "flatdelta/lattice_reduction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flatdelta {
namespace {

// Coordinates in which the simplex is enumerated: y = U (x - n v_0) for a
// unimodular U whose rows are short functionals on the edge vectors (LLL
// under the form E E^T). Unimodular maps preserve Z^d, so counts are
// unchanged while the bounding box of a thin simplex shrinks drastically.
// D * mu_i(y) = (adj row i) . y with D = |det(U E)| > 0.
struct Frame {
  IntMatrix transform;   // U
  IntMatrix edges;       // U E, columns are the reduced edge vectors
  IntMatrix scaled_inverse;  // D (U E)^{-1}
  Integer scale;         // D
};

Frame make_frame(const Simplex& s) {
  const IntMatrix edges = s.edge_matrix();
  IntMatrix u = lll_reduce_gram(edges * edges.transposed());
  IntMatrix reduced = u * edges;

  // Widest coordinate last: the innermost level is resolved in closed form.
  const std::size_t d = s.dim();
  std::vector<Integer> extent(d);
  for (std::size_t r = 0; r < d; ++r) {
    Integer lo = 0, hi = 0;
    for (std::size_t c = 0; c < d; ++c) {
      lo = std::min(lo, reduced(r, c));
      hi = std::max(hi, reduced(r, c));
    }
    extent[r] = hi - lo;
  }
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return extent[a] < extent[b]; });
  IntMatrix permuted(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) permuted(r, c) = u(order[r], c);

  Frame f{permuted, permuted * edges, {}, {}};
  f.scale = det_bareiss(f.edges);
  f.scaled_inverse = adjugate(f.edges);
  if (f.scale < 0) {
    f.scale = -f.scale;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) f.scaled_inverse(r, c) = -f.scaled_inverse(r, c);
  }
  return f;
}

// Constraints on D*mu_1..D*mu_d and D*mu_0 = D*height - sum D*mu_i.
std::vector<LinearConstraint> coefficient_constraints(const Frame& f, const Integer& height,
                                                      const std::optional<Integer>& lower,
                                                      const std::optional<Integer>& upper) {
  const std::size_t d = f.edges.rows();
  std::vector<LinearConstraint> out;
  LinearConstraint apex{std::vector<Integer>(d, Integer(0)), f.scale * height, lower, upper};
  for (std::size_t i = 0; i < d; ++i) {
    LinearConstraint c{std::vector<Integer>(d), 0, lower, upper};
    for (std::size_t j = 0; j < d; ++j) {
      c.coefficients[j] = f.scaled_inverse(i, j);
      apex.coefficients[j] -= f.scaled_inverse(i, j);
    }
    out.push_back(std::move(c));
  }
  out.push_back(std::move(apex));
  return out;
}

// Box of height * conv(0, reduced edges).
void dilation_box(const Frame& f, const Integer& height, std::vector<Integer>& lo, std::vector<Integer>& hi) {
  const std::size_t d = f.edges.rows();
  lo.assign(d, Integer(0));
  hi.assign(d, Integer(0));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const Integer v = f.edges(r, c) * height;
      lo[r] = std::min(lo[r], v);
      hi[r] = std::max(hi[r], v);
    }
}

void enforce_budget(const Integer& candidates, const CountBudget& budget) {
  if (candidates > budget.max_candidates) {
    std::ostringstream msg;
    msg << "enumeration needs " << candidates << " candidates, budget is " << budget.max_candidates;
    throw BudgetExceededError(msg.str());
  }
}

Integer count_dilation(const Simplex& s, unsigned long n, bool interior, const CountBudget& budget) {
  const Frame f = make_frame(s);
  const Integer height(n);
  BoundedRegion region;
  dilation_box(f, height, region.lower, region.upper);
  region.constraints = coefficient_constraints(f, height, Integer(interior ? 1 : 0), std::nullopt);
  enforce_budget(candidate_count(region), budget);
  return count_points(region);
}

}  // namespace

Integer count_lattice_points(const Simplex& s, unsigned long n, const CountBudget& budget) {
  return count_dilation(s, n, false, budget);
}

Integer count_interior_points(const Simplex& s, unsigned long n, const CountBudget& budget) {
  if (n == 0) throw std::invalid_argument("interior counts need a dilation n >= 1");
  return count_dilation(s, n, true, budget);
}

std::vector<BoxPoint> box_points(const Simplex& s, const CountBudget& budget) {
  const std::size_t d = s.dim();
  const Frame f = make_frame(s);

  // Parallelepiped box of sum lambda_i (reduced edge_i): negative and
  // positive parts per coordinate.
  std::vector<Integer> para_lo(d, Integer(0)), para_hi(d, Integer(0));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      if (f.edges(r, c) < 0) para_lo[r] += f.edges(r, c);
      if (f.edges(r, c) > 0) para_hi[r] += f.edges(r, c);
    }

  std::vector<BoundedRegion> slices;
  Integer candidates = 0;
  for (std::size_t h = 0; h <= d; ++h) {
    BoundedRegion region;
    dilation_box(f, Integer(h), region.lower, region.upper);
    for (std::size_t r = 0; r < d; ++r) {
      region.lower[r] = std::max(region.lower[r], para_lo[r]);
      region.upper[r] = std::min(region.upper[r], para_hi[r]);
    }
    region.constraints = coefficient_constraints(f, Integer(h), Integer(0), f.scale - 1);
    candidates += candidate_count(region);
    slices.push_back(std::move(region));
  }
  enforce_budget(candidates, budget);

  // Back to original coordinates: x = h v_0 + U^{-1} y.
  const Integer u_det = det_bareiss(f.transform);
  IntMatrix u_inverse = adjugate(f.transform);
  if (u_det < 0)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) u_inverse(r, c) = -u_inverse(r, c);

  std::vector<IntVector> lifted;
  for (const auto& v : s.vertices()) {
    std::vector<Integer> col(v.begin(), v.end());
    col.emplace_back(1);
    lifted.emplace_back(std::move(col));
  }
  const IntMatrix lift_matrix = IntMatrix::from_columns(lifted);

  std::vector<BoxPoint> out;
  for (std::size_t h = 0; h <= d; ++h) {
    for_each_point(slices[h], [&](const std::vector<Integer>& y) {
      IntVector x = s.vertex(0) * Integer(h) + u_inverse * IntVector(y);
      std::vector<Integer> alpha(x.begin(), x.end());
      alpha.emplace_back(h);
      IntVector point(std::move(alpha));
      RatVector lambdas = solve_exact(lift_matrix, point);
      for (const auto& q : lambdas)
        if (sgn(q) < 0 || q >= 1) throw std::logic_error("Box enumeration produced a point outside the parallelepiped");
      out.push_back(BoxPoint{std::move(point), std::move(lambdas), h});
    });
  }
  std::sort(out.begin(), out.end(), [](const BoxPoint& a, const BoxPoint& b) { return a.point < b.point; });
  return out;
}

unsigned long degree_of(const RatVector& lambdas) {
  Rational total = 0;
  for (std::size_t i = 1; i < lambdas.dim(); ++i) total += lambdas[i];
  return ceil(total).get_ui();
}

}  // namespace flatdelta
