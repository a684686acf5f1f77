#include "flatdelta/exact_linalg.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace flatdelta {

IntVector::IntVector(std::initializer_list<long> values) {
  entries_.reserve(values.size());
  for (long v : values) entries_.emplace_back(v);
}

IntVector IntVector::unit(std::size_t dim, std::size_t index) {
  IntVector v(dim);
  v[index] = 1;
  return v;
}

IntVector IntVector::operator+(const IntVector& other) const {
  if (dim() != other.dim()) throw DimensionMismatchError("vector dimensions differ");
  IntVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = entries_[i] + other[i];
  return out;
}

IntVector IntVector::operator-(const IntVector& other) const {
  if (dim() != other.dim()) throw DimensionMismatchError("vector dimensions differ");
  IntVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = entries_[i] - other[i];
  return out;
}

IntVector IntVector::operator*(const Integer& scale) const {
  IntVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = entries_[i] * scale;
  return out;
}

RatVector::RatVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (auto& q : entries_) q.canonicalize();
}

RatVector::RatVector(std::initializer_list<Rational> values) : RatVector(std::vector<Rational>(values)) {}

Rational RatVector::sum() const {
  Rational total = 0;
  for (const auto& q : entries_) total += q;
  return total;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatchError("ragged matrix literal");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
  if (columns.empty()) return {};
  const std::size_t rows = columns.front().dim();
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != rows) throw DimensionMismatchError("columns have different lengths");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  return from_columns(rows).transposed();
}

IntVector IntMatrix::row(std::size_t r) const {
  IntVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatchError("matrix product shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.dim()) throw DimensionMismatchError("matrix-vector shape mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

namespace {

// Fraction-free forward elimination over the first `pivot_cols` columns.
// Returns false when a zero pivot column is met (singular leading block).
// `sign` tracks row swaps.
bool bareiss_eliminate(IntMatrix& a, std::size_t pivot_cols, int& sign) {
  const std::size_t n = a.rows();
  Integer prev = 1;
  sign = 1;
  for (std::size_t k = 0; k < pivot_cols; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != k) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(k, c), a(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        Integer t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return true;
}

}  // namespace

Integer det_bareiss(const IntMatrix& m) {
  if (!m.is_square()) throw NonSquareError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  if (!bareiss_eliminate(a, a.rows(), sign)) return 0;
  return sign * a(a.rows() - 1, a.rows() - 1);
}

RatVector solve_exact(const IntMatrix& m, const IntVector& b) {
  if (!m.is_square()) throw NonSquareError("solve with a non-square matrix");
  if (b.dim() != m.rows()) throw DimensionMismatchError("right-hand side length differs from matrix rows");
  const std::size_t n = m.rows();
  IntMatrix a(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = m(r, c);
    a(r, n) = b[r];
  }
  int sign = 1;
  if (!bareiss_eliminate(a, n, sign)) throw SingularMatrixError("matrix is singular");

  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(a(ii, n));
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(a(ii, j)) * x[j];
    x[ii] = acc / Rational(a(ii, ii));
  }
  return RatVector(std::move(x));
}

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.is_square()) throw NonSquareError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  const Integer det = det_bareiss(m);
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  if (det != 0) {
    // adj = det * m^{-1}, one exact solve per column.
    for (std::size_t c = 0; c < n; ++c) {
      RatVector col = solve_exact(m, IntVector::unit(n, c));
      for (std::size_t r = 0; r < n; ++r) {
        Rational v = col[r] * Rational(det);
        adj(r, c) = v.get_num();
      }
    }
    return adj;
  }
  // Singular: cofactors via minors.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == c) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == r) continue;
          minor(mi, mj++) = m(i, j);
        }
        ++mi;
      }
      adj(r, c) = ((r + c) % 2 == 0 ? 1 : -1) * det_bareiss(minor);
    }
  return adj;
}

Integer binom_generalized(const Integer& n, unsigned long k) {
  Integer result = 1;
  for (unsigned long i = 0; i < k; ++i) {
    result *= n - i;
    // result is now n(n-1)...(n-i)/i!, divisible by i+1.
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i + 1);
    if (result == 0) break;
  }
  return result;
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer ceil(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

std::ostream& operator<<(std::ostream& os, const IntVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const RatVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

}  // namespace flatdelta
