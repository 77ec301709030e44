#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "galecubic/field.hpp"

namespace galecubic {

/// Dense row-major matrix over any ring-like value type (Scalar, MultiPoly).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }
  void set_row(std::size_t r, const std::vector<T>& v) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }
  void set_col(std::size_t c, const std::vector<T>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Matrix transpose() const {
    if (data_.empty()) return Matrix(cols_, rows_, T{});
    Matrix t(cols_, rows_, data_.front());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Columns [c0, c0 + n).
  Matrix col_block(std::size_t c0, std::size_t n) const {
    Matrix out(rows_, n, data_.empty() ? T{} : data_.front());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < n; ++c) out(r, c) = (*this)(r, c0 + c);
    return out;
  }
  /// Rows [r0, r0 + n).
  Matrix row_block(std::size_t r0, std::size_t n) const {
    Matrix out(n, cols_, data_.empty() ? T{} : data_.front());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r0 + r, c);
    return out;
  }

  /// Horizontal concatenation; row counts must agree.
  static Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw InvalidInput("hcat: row count mismatch");
    const T& seed = a.data_.empty() ? (b.data_.empty() ? T{} : b.data_.front()) : a.data_.front();
    Matrix out(a.rows(), a.cols() + b.cols(), seed);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
  }
  static Matrix vcat(const Matrix& a, const Matrix& b) { return hcat(a.transpose(), b.transpose()).transpose(); }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product: shape mismatch");
  if (a.rows() == 0 || b.cols() == 0) return Matrix<T>(a.rows(), b.cols(), T{});
  const T zero = a(0, 0) - a(0, 0);
  Matrix<T> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == zero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix sum: shape mismatch");
  Matrix<T> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix difference: shape mismatch");
  Matrix<T> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

/// Laplace expansion along the first row. Works over any commutative ring.
template <class T>
T cofactor_det(const Matrix<T>& m, const T& one) {
  const std::size_t n = m.rows();
  if (n == 0) return one;
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T acc = one - one;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == acc - acc) continue;
    Matrix<T> minor(n - 1, n - 1, one);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    T term = m(0, j) * cofactor_det(minor, one);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

/// Fraction-free (Bareiss) elimination. `exact_div(a, b)` must return a / b
/// whenever b divides a exactly; zero tests use `is_zero`.
template <class T, class Div, class IsZero>
T bareiss_det(Matrix<T> m, const T& one, Div exact_div, IsZero is_zero) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return one;
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero(m(piv, k))) ++piv;
      if (piv == n) return one - one;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

// ---- Linear algebra over a Field -------------------------------------------

using FMatrix = Matrix<Scalar>;
using FVector = std::vector<Scalar>;

FMatrix zeros(const Field& f, std::size_t rows, std::size_t cols);
FMatrix identity(const Field& f, std::size_t n);

/// Reduced row echelon form plus the pivot column of each nonzero row.
struct RowEchelon {
  FMatrix rref;
  std::vector<std::size_t> pivots;
};
RowEchelon row_reduce(const FMatrix& m);

std::size_t rank(const FMatrix& m);
/// Columns span ker(m). Canonical: one column per free variable (ascending),
/// that variable set to 1 and the other free variables to 0.
FMatrix kernel_basis(const FMatrix& m);
/// Determinant by fraction-free elimination.
Scalar det(const FMatrix& m);
std::optional<FMatrix> inverse(const FMatrix& m);
/// Some x with m x = b, if the system is consistent.
std::optional<FVector> solve(const FMatrix& m, const FVector& b);
/// Solve m X = B column by column.
std::optional<FMatrix> solve(const FMatrix& m, const FMatrix& b);

/// The nonzero rows of rref(m); a canonical representative of the row space.
FMatrix row_space_basis(const FMatrix& m);
bool same_row_space(const FMatrix& a, const FMatrix& b);
bool same_column_space(const FMatrix& a, const FMatrix& b);
/// Columns of the result span col(a) ∩ col(b).
FMatrix column_space_intersection(const FMatrix& a, const FMatrix& b);
/// Independent columns spanning col(m) (the pivot columns of m).
FMatrix column_space_basis(const FMatrix& m);
/// dim(col(a) ∩ col(b)).
std::size_t intersection_dim(const FMatrix& a, const FMatrix& b);

FVector mat_vec(const FMatrix& m, const FVector& v);
bool is_zero(const FMatrix& m);
/// A column matrix built from a vector.
FMatrix column(const FVector& v);
std::string to_string(const FMatrix& m);

}  // namespace galecubic
