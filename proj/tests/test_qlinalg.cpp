#include "wallcross/qlinalg.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using wallcross::Rational;
using wallcross::qlinalg::kernel_dim;
using wallcross::qlinalg::Matrix;
using wallcross::qlinalg::SubspaceBasis;

namespace {

// Independent rank oracle: plain Gaussian elimination over Q, no Bareiss.
long long gauss_rank(Matrix m) {
  long long rank = 0;
  long long rows = m.rows(), cols = m.cols();
  for (long long c = 0; c < cols && rank < rows; ++c) {
    long long pivot = -1;
    for (long long r = rank; r < rows; ++r)
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (long long cc = 0; cc < cols; ++cc) std::swap(m.at(rank, cc), m.at(pivot, cc));
    for (long long r = rank + 1; r < rows; ++r) {
      if (m.at(r, c) == 0) continue;
      Rational f = m.at(r, c) / m.at(rank, c);
      for (long long cc = c; cc < cols; ++cc) m.at(r, cc) -= f * m.at(rank, cc);
    }
    ++rank;
  }
  return rank;
}

Matrix random_matrix(std::mt19937& rng, long long rows, long long cols) {
  Matrix m(rows, cols);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (long long r = 0; r < rows; ++r)
    for (long long c = 0; c < cols; ++c) m.at(r, c) = Rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("identity, zero, product basics") {
  Matrix id = Matrix::identity(3);
  Matrix z = Matrix::zero(3, 3);
  CHECK(id * id == id);
  CHECK(id.rank() == 3);
  CHECK(z.rank() == 0);
  CHECK(z.is_zero());
  CHECK(!id.is_zero());
  CHECK((id + z) == id);
  CHECK((id - id).is_zero());
}

TEST_CASE("known ranks") {
  CHECK(Matrix::from_rows(2, 2, {Rational(1), Rational(2), Rational(2), Rational(4)}).rank() == 1);
  CHECK(Matrix::from_rows(2, 3,
                          {Rational(1), Rational(0), Rational(2), Rational(0), Rational(1),
                           Rational(3)})
            .rank() == 2);
  // Hilbert 3x3 is invertible; exact arithmetic must see full rank.
  Matrix h(3, 3);
  for (long long r = 0; r < 3; ++r)
    for (long long c = 0; c < 3; ++c) h.at(r, c) = Rational(1, r + c + 1);
  CHECK(h.rank() == 3);
  CHECK(h.is_invertible());
}

TEST_CASE("empty shapes behave") {
  Matrix a(0, 3), b(3, 0);
  CHECK(a.rank() == 0);
  CHECK(b.rank() == 0);
  CHECK((b * a).rows() == 3);
  CHECK((b * a).cols() == 3);
  CHECK((b * a).is_zero());  // empty inner dimension
  CHECK(kernel_dim(a) == 3);
  CHECK(kernel_dim(b) == 0);
}

TEST_CASE("rank agrees with a naive Gaussian oracle on random matrices") {
  std::mt19937 rng(20260816);
  for (int trial = 0; trial < 200; ++trial) {
    long long rows = 1 + (rng() % 5), cols = 1 + (rng() % 5);
    Matrix m = random_matrix(rng, rows, cols);
    CHECK(m.rank() == gauss_rank(m));
  }
}

TEST_CASE("rank is invariant under row scaling and transposition-free checks") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m = random_matrix(rng, 4, 4);
    Matrix scaled = m;
    for (long long c = 0; c < 4; ++c) scaled.at(2, c) *= Rational(7, 3);
    CHECK(m.rank() == scaled.rank());
    CHECK((m * Matrix::identity(4)) == m);
  }
}

TEST_CASE("kernel dimension of a product bound") {
  // rank(AB) <= min(rank A, rank B)
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix a = random_matrix(rng, 3, 4);
    Matrix b = random_matrix(rng, 4, 3);
    long long r = (a * b).rank();
    CHECK(r <= a.rank());
    CHECK(r <= b.rank());
  }
}

TEST_CASE("subspace basis grows only on independent vectors") {
  SubspaceBasis s(3);
  CHECK(s.dim() == 0);
  CHECK(s.insert({Rational(1), Rational(2), Rational(0)}));
  CHECK(!s.insert({Rational(2), Rational(4), Rational(0)}));
  CHECK(s.insert({Rational(0), Rational(0), Rational(5)}));
  CHECK(!s.insert({Rational(1), Rational(2), Rational(7)}));
  CHECK(s.insert({Rational(0), Rational(1), Rational(0)}));
  CHECK(s.dim() == 3);
  CHECK(!s.insert({Rational(9), Rational(-3), Rational(11, 7)}));
}

TEST_CASE("subspace basis dimension equals matrix rank of the inserted rows") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    long long n = 2 + (rng() % 4);
    long long count = 1 + (rng() % 6);
    Matrix m = random_matrix(rng, count, n);
    SubspaceBasis s(n);
    for (long long r = 0; r < count; ++r) {
      std::vector<Rational> row(n);
      for (long long c = 0; c < n; ++c) row[c] = m.at(r, c);
      s.insert(std::move(row));
    }
    CHECK(s.dim() == m.rank());
  }
}

TEST_CASE("matrix shape and bounds errors") {
  CHECK_THROWS(Matrix::from_rows(2, 2, {Rational(1)}));
  Matrix a(2, 3), b(2, 3);
  CHECK_THROWS(a * b);  // inner dims mismatch
  Matrix c(2, 2);
  CHECK_THROWS(c.at(2, 0));
  CHECK_THROWS(c.at(0, -1));
}
