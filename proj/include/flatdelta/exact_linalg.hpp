#pragma once

// Exact integer/rational linear algebra on top of GMP.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatdelta {

using Integer = mpz_class;
using Rational = mpq_class;

class NonSquareError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense vector of arbitrary-precision integers.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t dim) : entries_(dim, Integer(0)) {}
  explicit IntVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  IntVector(std::initializer_list<long> values);

  static IntVector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Integer>& entries() const { return entries_; }

  IntVector operator+(const IntVector& other) const;
  IntVector operator-(const IntVector& other) const;
  IntVector operator*(const Integer& scale) const;

  friend bool operator==(const IntVector& a, const IntVector& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const IntVector& a, const IntVector& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Integer> entries_;
};

/// Dense vector of rationals; mpq_class keeps every entry canonical
/// (lowest terms, positive denominator).
class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::vector<Rational> entries);
  RatVector(std::initializer_list<Rational> values);

  std::size_t dim() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational sum() const;

  friend bool operator==(const RatVector& a, const RatVector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Rational> entries_;
};

/// Row-major dense integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVector>& columns);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;

  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det_bareiss(const IntMatrix& m);

/// Unique rational solution of m * x = b. Throws SingularMatrixError when
/// det(m) == 0.
RatVector solve_exact(const IntMatrix& m, const IntVector& b);

/// adj(m), so that m * adj(m) == det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// n (n-1) ... (n-k+1) / k!, valid for every integer n including negatives.
Integer binom_generalized(const Integer& n, unsigned long k);

Integer floor_div(const Integer& num, const Integer& den);
Integer ceil_div(const Integer& num, const Integer& den);
Integer ceil(const Rational& q);

std::ostream& operator<<(std::ostream& os, const IntVector& v);
std::ostream& operator<<(std::ostream& os, const RatVector& v);

}  // namespace flatdelta
