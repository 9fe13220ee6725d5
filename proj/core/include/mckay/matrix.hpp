#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mckay/error.hpp"

namespace mckay {

/// Dense row-major matrix over an exact field. The field type must provide
/// `is_zero()`, `inverse()` and the arithmetic operators.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(ErrorCode::dimension_mismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<K> column(std::size_t c) const {
    std::vector<K> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void set_column(std::size_t c, std::span<const K> values) {
    if (values.size() != rows_) throw Error(ErrorCode::dimension_mismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::vector<K> apply(std::span<const K> x) const {
    if (x.size() != cols_) throw Error(ErrorCode::dimension_mismatch, "matrix-vector size mismatch");
    std::vector<K> y(rows_, K(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!x[c].is_zero() && !(*this)(r, c).is_zero()) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::dimension_mismatch, "matrix product size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  Matrix scaled(const K& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = x * s;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

namespace detail {

// Gauss-Jordan elimination of `a` with `rhs_cols` augmented columns on the
// right. Returns the pivot column of each pivot row.
template <class K>
std::vector<std::size_t> row_reduce(Matrix<K>& a, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    const K inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c)
      if (!a(row, c).is_zero()) a(row, c) = a(row, c) * inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const K f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class K>
std::size_t rank(Matrix<K> a) {
  return detail::row_reduce(a, a.cols()).size();
}

/// Unique solution of a square nonsingular system; throws singular_matrix.
template <class K>
std::vector<K> solve(const Matrix<K>& a, std::span<const K> b) {
  if (!a.square() || b.size() != a.rows())
    throw Error(ErrorCode::dimension_mismatch, "solve expects a square system");
  const std::size_t n = a.rows();
  Matrix<K> aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  if (detail::row_reduce(aug, n).size() != n)
    throw Error(ErrorCode::singular_matrix, "singular " + std::to_string(n) + "x" + std::to_string(n) + " system");
  return aug.column(n);
}

template <class K>
Matrix<K> inverse(const Matrix<K>& a) {
  if (!a.square()) throw Error(ErrorCode::dimension_mismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix<K> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = K(1);
  }
  if (detail::row_reduce(aug, n).size() != n)
    throw Error(ErrorCode::singular_matrix, "matrix is not invertible");
  Matrix<K> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

/// Solution of an overdetermined system with full column rank, or nullopt
/// when the system is inconsistent.
template <class K>
std::optional<std::vector<K>> solve_consistent(const Matrix<K>& a, std::span<const K> b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::dimension_mismatch, "rhs length mismatch");
  const std::size_t n = a.cols();
  Matrix<K> aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = detail::row_reduce(aug, n);
  if (pivots.size() != n) throw Error(ErrorCode::singular_matrix, "system lacks full column rank");
  for (std::size_t r = n; r < a.rows(); ++r)
    if (!aug(r, n).is_zero()) return std::nullopt;
  std::vector<K> x;
  x.reserve(n);
  for (std::size_t r = 0; r < n; ++r) x.push_back(aug(r, n));
  return x;
}

}  // namespace mckay
