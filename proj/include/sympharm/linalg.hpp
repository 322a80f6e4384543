#pragma once

#include <optional>
#include <vector>

#include "sympharm/scalar.hpp"

namespace sympharm {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  bool is_zero() const {
    for (const T& v : data_)
      if (!(v == T(0))) return false;
    return true;
  }

  Matrix operator-() const {
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (size_t j = 0; j < b.cols_; ++j) m(i, j) = m(i, j) + aik * b(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using CMatrix = Matrix<GaussianRational>;

/**
 * Kernel of a Q(i)-matrix as columns of the returned matrix, in the
 * reduced-echelon-derived canonical form: one column per free column f
 * of the row-reduced matrix, carrying 1 at position f and the solved
 * pivot entries above. Rows are cleared of denominators and reduced by
 * fraction-free (Bareiss) elimination over Gaussian integers with
 * deterministic first-nonzero pivoting, so the result is canonical.
 */
CMatrix kernel_basis(const CMatrix& m);

size_t rank(const CMatrix& m);

/**
 * Solves a * X = b column-by-column, assigning zero to free variables.
 * Returns nullopt if any column of b is outside the column space of a.
 */
std::optional<CMatrix> solve(const CMatrix& a, const CMatrix& b);

/// True iff every column of b lies in the column space of a.
bool spans(const CMatrix& a, const CMatrix& b);

CMatrix conj_transposed(const CMatrix& m);

}  // namespace sympharm
