#include "flatdelta/lattice_reduction.hpp"

#include <utility>
#include <vector>

namespace flatdelta {
namespace {

Integer form(const IntMatrix& gram, const IntVector& x, const IntVector& y) {
  Integer total = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.dim(); ++j) total += x[i] * gram(i, j) * y[j];
  }
  return total;
}

struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> norms;
};

GramSchmidt orthogonalize(const IntMatrix& gram, const std::vector<IntVector>& basis) {
  const std::size_t n = basis.size();
  GramSchmidt gs{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)), std::vector<Rational>(n)};
  std::vector<std::vector<Rational>> r(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Rational acc(form(gram, basis[i], basis[j]));
      for (std::size_t m = 0; m < j; ++m) acc -= gs.mu[j][m] * r[i][m];
      r[i][j] = acc;
      if (j < i) gs.mu[i][j] = acc / r[j][j];
    }
    gs.norms[i] = r[i][i];
  }
  return gs;
}

Integer round_nearest(const Rational& q) {
  // floor(q + 1/2)
  Rational shifted = q + Rational(1, 2);
  return floor_div(shifted.get_num(), shifted.get_den());
}

}  // namespace

IntMatrix lll_reduce_gram(const IntMatrix& gram) {
  if (!gram.is_square()) throw NonSquareError("gram matrix must be square");
  const std::size_t n = gram.rows();
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(IntVector::unit(n, i));
  if (n <= 1) return IntMatrix::identity(n);

  const Rational lovasz(3, 4);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      GramSchmidt gs = orthogonalize(gram, basis);
      Integer q = round_nearest(gs.mu[k][jj]);
      if (q != 0) basis[k] = basis[k] - basis[jj] * q;
    }
    GramSchmidt gs = orthogonalize(gram, basis);
    const Rational& m = gs.mu[k][k - 1];
    if (gs.norms[k] >= (lovasz - m * m) * gs.norms[k - 1]) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      k = k > 1 ? k - 1 : 1;
    }
  }
  return IntMatrix::from_rows(basis);
}

}  // namespace flatdelta
