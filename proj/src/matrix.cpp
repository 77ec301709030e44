#include "galecubic/matrix.hpp"

#include <sstream>

namespace galecubic {

FMatrix zeros(const Field& f, std::size_t rows, std::size_t cols) { return FMatrix(rows, cols, f.zero()); }

FMatrix identity(const Field& f, std::size_t n) {
  FMatrix m = zeros(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

RowEchelon row_reduce(const FMatrix& m) {
  RowEchelon out{m, {}};
  FMatrix& a = out.rref;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a(piv, c).is_zero()) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a(r, j), a(piv, j));
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < C; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const FMatrix& m) { return row_reduce(m).pivots.size(); }

FMatrix kernel_basis(const FMatrix& m) {
  const std::size_t C = m.cols();
  if (m.rows() == 0) {
    // No constraints: need a field to build the identity, which an empty
    // matrix cannot supply unless it has columns of known field.
    throw InvalidInput("kernel_basis: matrix without rows carries no field");
  }
  const Field& f = m(0, 0).field();
  RowEchelon re = row_reduce(m);
  std::vector<bool> is_pivot(C, false);
  for (std::size_t p : re.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < C; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FMatrix k = zeros(f, C, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t fc = free_cols[j];
    k(fc, j) = f.one();
    for (std::size_t r = 0; r < re.pivots.size(); ++r) k(re.pivots[r], j) = -re.rref(r, fc);
  }
  return k;
}

Scalar det(const FMatrix& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  if (m.rows() == 0) return Field::rationals().one();
  const Field& f = m(0, 0).field();
  // Over a field ordinary elimination is exact and cheaper than Bareiss.
  FMatrix a = m;
  const std::size_t n = a.rows();
  Scalar d = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
      d = -d;
    }
    d *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return d;
}

std::optional<FMatrix> inverse(const FMatrix& m) {
  if (!m.is_square()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  const Field& f = m(0, 0).field();
  RowEchelon re = row_reduce(FMatrix::hcat(m, identity(f, n)));
  if (re.pivots.size() < n || re.pivots[n - 1] != n - 1) return std::nullopt;
  return re.rref.col_block(n, n);
}

std::optional<FVector> solve(const FMatrix& m, const FVector& b) {
  auto x = solve(m, column(b));
  if (!x) return std::nullopt;
  return x->col(0);
}

std::optional<FMatrix> solve(const FMatrix& m, const FMatrix& b) {
  if (m.rows() != b.rows()) throw InvalidInput("solve: shape mismatch");
  const std::size_t C = m.cols();
  RowEchelon re = row_reduce(FMatrix::hcat(m, b));
  const Field& f = (m.rows() ? m(0, 0) : b(0, 0)).field();
  FMatrix x = zeros(f, C, b.cols());
  for (std::size_t r = 0; r < re.pivots.size(); ++r) {
    if (re.pivots[r] >= C) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(re.pivots[r], j) = re.rref(r, C + j);
  }
  return x;
}

FMatrix row_space_basis(const FMatrix& m) {
  RowEchelon re = row_reduce(m);
  return re.rref.row_block(0, re.pivots.size());
}

bool same_row_space(const FMatrix& a, const FMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return row_space_basis(a) == row_space_basis(b);
}

bool same_column_space(const FMatrix& a, const FMatrix& b) { return same_row_space(a.transpose(), b.transpose()); }

FMatrix column_space_basis(const FMatrix& m) {
  RowEchelon re = row_reduce(m);
  FMatrix out(m.rows(), re.pivots.size(), m.rows() ? m(0, 0).field().zero() : Scalar());
  for (std::size_t j = 0; j < re.pivots.size(); ++j) out.set_col(j, m.col(re.pivots[j]));
  return out;
}

FMatrix column_space_intersection(const FMatrix& a, const FMatrix& b) {
  const FMatrix A = column_space_basis(a), B = column_space_basis(b);
  const Field& f = a(0, 0).field();
  if (A.cols() == 0 || B.cols() == 0) return zeros(f, a.rows(), 0);
  // A x = B y  <=>  [A | -B] (x, y) = 0; the intersection is A x.
  FMatrix negB = B;
  for (std::size_t i = 0; i < negB.rows(); ++i)
    for (std::size_t j = 0; j < negB.cols(); ++j) negB(i, j) = -negB(i, j);
  FMatrix k = kernel_basis(FMatrix::hcat(A, negB));
  if (k.cols() == 0) return zeros(f, a.rows(), 0);
  return A * k.row_block(0, A.cols());
}

std::size_t intersection_dim(const FMatrix& a, const FMatrix& b) {
  return rank(a) + rank(b) - rank(FMatrix::hcat(a, b));
}

FVector mat_vec(const FMatrix& m, const FVector& v) {
  if (m.cols() != v.size()) throw InvalidInput("mat_vec: shape mismatch");
  FVector out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar acc = v.empty() ? m(i, 0).field().zero() : v[0].field().zero();
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) acc += m(i, j) * v[j];
    out.push_back(acc);
  }
  return out;
}

bool is_zero(const FMatrix& m) {
  for (const Scalar& s : m.data())
    if (!s.is_zero()) return false;
  return true;
}

FMatrix column(const FVector& v) {
  if (v.empty()) return FMatrix();
  FMatrix m(v.size(), 1, v[0]);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::string to_string(const FMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).str();
    os << "]\n";
  }
  return os.str();
}

}  // namespace galecubic
