#include "wallcross/qlinalg.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace wallcross::qlinalg {

Matrix::Matrix(long long rows, long long cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  data_.assign(static_cast<std::size_t>(rows * cols), Rational(0));
}

Matrix Matrix::identity(long long n) {
  Matrix m(n, n);
  for (long long k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

Matrix Matrix::from_rows(long long rows, long long cols, std::vector<Rational> entries) {
  if (static_cast<long long>(entries.size()) != rows * cols)
    throw std::invalid_argument("entry count does not match shape");
  Matrix m(rows, cols);
  m.data_ = std::move(entries);
  return m;
}

Rational& Matrix::at(long long r, long long c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  return data_[static_cast<std::size_t>(r * cols_ + c)];
}

const Rational& Matrix::at(long long r, long long c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  return data_[static_cast<std::size_t>(r * cols_ + c)];
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("shape mismatch in product: " + std::to_string(a.cols_) + " vs " +
                                std::to_string(b.rows_));
  Matrix out(a.rows_, b.cols_);
  for (long long r = 0; r < a.rows_; ++r)
    for (long long k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(r, k);
      if (x == 0) continue;
      for (long long c = 0; c < b.cols_; ++c) out.at(r, c) += x * b.at(k, c);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch in sum");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t p = 0; p < a.data_.size(); ++p) out.data_[p] = a.data_[p] + b.data_[p];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch in difference");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t p = 0; p < a.data_.size(); ++p) out.data_[p] = a.data_[p] - b.data_[p];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

long long Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  // Clear denominators row by row; scaling rows preserves rank.
  std::vector<std::vector<Int>> a(static_cast<std::size_t>(rows_),
                                  std::vector<Int>(static_cast<std::size_t>(cols_)));
  for (long long r = 0; r < rows_; ++r) {
    Int l = 1;
    for (long long c = 0; c < cols_; ++c) l = boost::multiprecision::lcm(l, denom(at(r, c)));
    for (long long c = 0; c < cols_; ++c) {
      const Rational& x = at(r, c);
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = numer(x) * (l / denom(x));
    }
  }

  long long rank = 0;
  Int prev = 1;
  for (long long col = 0; col < cols_ && rank < rows_; ++col) {
    long long pivot = -1;
    for (long long r = rank; r < rows_; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    auto& prow = a[static_cast<std::size_t>(rank)];
    for (long long r = rank + 1; r < rows_; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      for (long long c = col + 1; c < cols_; ++c) {
        auto uc = static_cast<std::size_t>(c);
        // Bareiss step: exact division by the previous pivot.
        row[uc] = (prow[static_cast<std::size_t>(col)] * row[uc] -
                   row[static_cast<std::size_t>(col)] * prow[uc]) /
                  prev;
      }
      row[static_cast<std::size_t>(col)] = 0;
    }
    prev = prow[static_cast<std::size_t>(col)];
    ++rank;
  }
  return rank;
}

bool SubspaceBasis::insert(std::vector<Rational> vec) {
  if (static_cast<long long>(vec.size()) != ambient_)
    throw std::invalid_argument("vector length does not match ambient dimension");
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    // Copy: the subtraction below writes through vec[pivots_[b]] itself.
    Rational coef = vec[static_cast<std::size_t>(pivots_[b])];
    if (coef != 0) {
      for (long long c = 0; c < ambient_; ++c)
        vec[static_cast<std::size_t>(c)] -= coef * rows_[b][static_cast<std::size_t>(c)];
    }
  }
  long long lead = -1;
  for (long long c = 0; c < ambient_; ++c)
    if (vec[static_cast<std::size_t>(c)] != 0) {
      lead = c;
      break;
    }
  if (lead < 0) return false;
  Rational inv = vec[static_cast<std::size_t>(lead)];
  for (long long c = 0; c < ambient_; ++c) vec[static_cast<std::size_t>(c)] /= inv;
  rows_.push_back(std::move(vec));
  pivots_.push_back(lead);
  return true;
}

}  // namespace wallcross::qlinalg
