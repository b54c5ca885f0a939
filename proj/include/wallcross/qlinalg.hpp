#pragma once

#include "wallcross/rational.hpp"

#include <vector>

namespace wallcross::qlinalg {

using wallcross::Int;
using wallcross::Rational;

// Dense matrix over Q. Zero-by-n shapes are legal and behave as expected;
// products with an empty inner dimension are zero matrices.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(long long rows, long long cols);

  static Matrix zero(long long rows, long long cols) { return Matrix(rows, cols); }
  static Matrix identity(long long n);
  // Row-major entries; size must be rows*cols.
  static Matrix from_rows(long long rows, long long cols, std::vector<Rational> entries);

  long long rows() const { return rows_; }
  long long cols() const { return cols_; }

  Rational& at(long long r, long long c);
  const Rational& at(long long r, long long c) const;

  bool is_zero() const;

  // Rank by fraction-free (Bareiss) elimination after clearing denominators
  // row by row; no numerical pivoting anywhere.
  long long rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  long long rows_, cols_;
  std::vector<Rational> data_;
};

inline long long kernel_dim(const Matrix& m) { return m.cols() - m.rank(); }

// Incremental row-space basis, used for Krylov-style closures. insert()
// reduces against the current echelon basis and reports whether the space
// grew.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(long long ambient) : ambient_(ambient) {}
  bool insert(std::vector<Rational> vec);
  long long dim() const { return static_cast<long long>(rows_.size()); }
  long long ambient() const { return ambient_; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  long long ambient_;
  std::vector<std::vector<Rational>> rows_;  // echelon, pivots_ tracks lead cols
  std::vector<long long> pivots_;
};

}  // namespace wallcross::qlinalg
