#pragma once

// Test-only oracles, deliberately independent of the enumeration engine:
// cofactor determinants and plain bounding-box counting in the original
// coordinates with a rational barycentric membership test.

#include "flatdelta/exact_linalg.hpp"
#include "flatdelta/polytope.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace flatdelta::testing {

inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, mc = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, mc++) = m(r, cc);
    Integer term = m(0, c) * cofactor_det(minor);
    if (c % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

// Visits every integer point of the axis-parallel box around n * P.
inline void for_each_box_point(const Simplex& s, long n, const std::function<void(const IntVector&)>& f) {
  const std::size_t d = s.dim();
  std::vector<long> lo(d), hi(d);
  for (std::size_t r = 0; r < d; ++r) {
    lo[r] = hi[r] = s.vertex(0)[r].get_si();
    for (const auto& v : s.vertices()) {
      lo[r] = std::min(lo[r], v[r].get_si());
      hi[r] = std::max(hi[r], v[r].get_si());
    }
    lo[r] *= n;
    hi[r] *= n;
  }
  IntVector x(d);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == d) {
      f(x);
      return;
    }
    for (long v = lo[j]; v <= hi[j]; ++v) {
      x[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
}

inline long naive_count(const Simplex& s, long n, bool interior) {
  long total = 0;
  for_each_box_point(s, n, [&](const IntVector& x) {
    auto mu = barycentric(s, x, Integer(n));
    if (mu && (!interior || strictly_positive(*mu))) ++total;
  });
  return total;
}

inline Simplex random_simplex(std::mt19937& rng, std::size_t d, long range) {
  std::uniform_int_distribution<long> coord(-range, range);
  for (;;) {
    std::vector<IntVector> vertices;
    for (std::size_t i = 0; i <= d; ++i) {
      IntVector v(d);
      for (std::size_t j = 0; j < d; ++j) v[j] = coord(rng);
      vertices.push_back(v);
    }
    try {
      return Simplex(std::move(vertices));
    } catch (const DegenerateSimplexError&) {
    }
  }
}

}  // namespace flatdelta::testing
