#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superint/param_ratfn.hpp"

namespace superint {

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense matrix over an exact field (GaussRational or ParamRatFn).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    std::vector<T> out(rows_, T(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product size mismatch");
    Matrix r(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k).is_zero()) continue;
        for (size_t j = 0; j < y.cols_; ++j)
          if (!y(k, j).is_zero()) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using ExactMatrix = Matrix<ParamRatFn>;

template <class T>
void require_square(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
}

// Laplace expansion along the first row.
template <class T>
T det_cofactor(const Matrix<T>& m) {
  require_square(m);
  size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T sum(0);
  for (size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix<T> minor(n - 1, n - 1);
    for (size_t i = 1; i < n; ++i)
      for (size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = m(i, c);
    T term = m(0, j) * det_cofactor(minor);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

// Fraction-free (Bareiss) elimination.
template <class T>
T det_bareiss(Matrix<T> m) {
  require_square(m);
  size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return T(0);
      for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? -d : d;
}

template <class T>
T det(const Matrix<T>& m) {
  return det_bareiss(m);
}

template <class T>
struct Rref {
  Matrix<T> m;
  std::vector<size_t> pivots;  // pivot column of each nonzero row
};

template <class T>
Rref<T> rref(Matrix<T> m) {
  Rref<T> out;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
    T inv = T(1) / m(row, col);
    for (size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      T f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) = m(i, j) - f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.m = std::move(m);
  return out;
}

template <class T>
size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

// Columns that are not pivots of the reduced row echelon form.
template <class T>
std::vector<size_t> free_columns(const Rref<T>& r, size_t cols) {
  std::vector<size_t> out;
  size_t p = 0;
  for (size_t c = 0; c < cols; ++c) {
    if (p < r.pivots.size() && r.pivots[p] == c) ++p;
    else out.push_back(c);
  }
  return out;
}

// One basis vector per free column, with a 1 in that column.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
  Rref<T> r = rref(m);
  std::vector<std::vector<T>> basis;
  for (size_t f : free_columns(r, m.cols())) {
    std::vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solution of m x = rhs with free components zero; nullopt if inconsistent.
template <class T>
std::optional<std::vector<T>> solve_particular(const Matrix<T>& m, const std::vector<T>& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  Rref<T> r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols(), T(0));
  for (size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.m(i, m.cols());
  return x;
}

// Unique solution; SingularMatrixError if m is singular.
template <class T>
std::vector<T> solve_linear(const Matrix<T>& m, const std::vector<T>& rhs) {
  if (m.rows() != m.cols()) throw std::invalid_argument("solve_linear: non-square matrix");
  if (rank(m) < m.rows()) throw SingularMatrixError("solve_linear: singular matrix");
  auto x = solve_particular(m, rhs);
  return *x;
}

}  // namespace superint
