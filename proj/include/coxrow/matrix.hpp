#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "coxrow/errors.hpp"
#include "coxrow/fp.hpp"

namespace coxrow {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense matrix over an exact field K (mpq_class or Fp). Row-major; maps act on
// column vectors. Zero-dimensional shapes are allowed internally.
template <typename K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, K(0)) {
    engine_check(rows >= 0 && cols >= 0, "negative matrix dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const K& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Matrix operator*(const Matrix& o) const {
    engine_check(cols_ == o.rows_, "matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& aik = at(i, k);
        if (aik == K(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    engine_check(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    engine_check(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const K& x : a_)
      if (!(x == K(0))) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(at(i, j) == (i == j ? K(1) : K(0)))) return false;
    return true;
  }

  Matrix column(int j) const {
    Matrix c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
  }

  void set_column(int j, const Matrix& c) {
    engine_check(c.rows() == rows_ && c.cols() == 1, "set_column shape mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = c.at(i, 0);
  }

  static Matrix concat_cols(const Matrix& a, const Matrix& b) {
    engine_check(a.rows() == b.rows(), "concat_cols row mismatch");
    Matrix r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
      for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<K> a_;
};

namespace detail {

// In-place reduced row echelon form; first-nonzero pivoting (exact arithmetic
// makes pivot choice a performance knob only). Returns pivot columns in order.
template <typename K>
std::vector<int> rref(Matrix<K>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!(m.at(i, c) == K(0))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    K inv = K(K(1) / m.at(r, c));
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      K f = m.at(i, c);
      if (f == K(0)) continue;
      for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <typename K>
int rank(const Matrix<K>& m) {
  Matrix<K> w = m;
  return static_cast<int>(detail::rref(w).size());
}

// Columns form a basis of the null space { x : m x = 0 }.
template <typename K>
Matrix<K> kernel_basis(const Matrix<K>& m) {
  Matrix<K> w = m;
  std::vector<int> pivots = detail::rref(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  int nfree = m.cols() - static_cast<int>(pivots.size());
  Matrix<K> ker(m.cols(), nfree);
  int kcol = 0;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    ker.at(f, kcol) = K(1);
    for (size_t r = 0; r < pivots.size(); ++r) ker.at(pivots[r], kcol) = -w.at(int(r), f);
    ++kcol;
  }
  return ker;
}

template <typename K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) raise(Errc::NonSquare, "inverse of non-square matrix");
  Matrix<K> aug = Matrix<K>::concat_cols(m, Matrix<K>::identity(m.rows()));
  std::vector<int> pivots = detail::rref(aug);
  if (static_cast<int>(pivots.size()) != m.rows() ||
      (!pivots.empty() && pivots.back() >= m.rows()))
    raise(Errc::Singular, "matrix is singular");
  Matrix<K> inv(m.rows(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) inv.at(i, j) = aug.at(i, m.rows() + j);
  return inv;
}

// Any particular solution X of A X = B; requires the system to be consistent.
template <typename K>
Matrix<K> solve(const Matrix<K>& a, const Matrix<K>& b) {
  engine_check(a.rows() == b.rows(), "solve shape mismatch");
  Matrix<K> aug = Matrix<K>::concat_cols(a, b);
  std::vector<int> pivots = detail::rref(aug);
  for (int c : pivots)
    engine_check(c < a.cols(), "inconsistent linear system in solve");
  Matrix<K> x(a.cols(), b.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j) x.at(pivots[r], j) = aug.at(int(r), a.cols() + j);
  return x;
}

template <typename K>
K determinant(const Matrix<K>& m) {
  if (m.rows() != m.cols()) raise(Errc::NonSquare, "determinant of non-square matrix");
  Matrix<K> w = m;
  K det = K(1);
  int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int i = c; i < n; ++i)
      if (!(w.at(i, c) == K(0))) {
        pr = i;
        break;
      }
    if (pr < 0) return K(0);
    if (pr != c) {
      for (int j = 0; j < n; ++j) std::swap(w.at(pr, j), w.at(c, j));
      det = -det;
    }
    det = det * w.at(c, c);
    K inv = K(K(1) / w.at(c, c));
    for (int i = c + 1; i < n; ++i) {
      K f = K(w.at(i, c) * inv);
      if (f == K(0)) continue;
      for (int j = c; j < n; ++j) w.at(i, j) = w.at(i, j) - f * w.at(c, j);
    }
  }
  return det;
}

using RationalMatrix = Matrix<Rational>;

bool is_integer_matrix(const RationalMatrix& m);

// C := -M^{-1} M^T. For unit-triangular integer M (all in-scope Cartans) the
// result is integral; that is asserted here.
RationalMatrix coxeter_from_cartan(const RationalMatrix& cartan);

bool check_identity_square(const RationalMatrix& a);   // A^2 == id
bool check_nilpotent_shift(const RationalMatrix& a);   // (A + id)^2 == 0

}  // namespace coxrow
