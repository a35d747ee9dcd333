#pragma once

// Exact linear algebra over any field-like Eigen scalar (FieldElem, Rational,
// ModP). Everything works by Gauss-Jordan elimination, skipping zero entries.

#include <optional>
#include <utility>
#include <vector>

#include "hopftwist/field.hpp"

namespace hopftwist {

inline bool scalar_is_zero(const FieldElem& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool scalar_is_zero(const Integer& x) { return sgn(x) == 0; }

template <typename Scalar>
Scalar scalar_inverse(const Scalar& x) {
  return Scalar(1) / x;
}
inline FieldElem scalar_inverse(const FieldElem& x) { return x.inverse(); }

/// In-place reduced row echelon form; returns pivot columns in order.
template <typename Scalar>
std::vector<int> rref_in_place(MatrixX<Scalar>& m) {
  std::vector<int> pivots;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && scalar_is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = scalar_inverse(m(r, c));
    std::vector<Eigen::Index> nz;
    for (Eigen::Index j = c; j < cols; ++j) {
      if (scalar_is_zero(m(r, j))) continue;
      m(r, j) = m(r, j) * inv;
      nz.push_back(j);
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || scalar_is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j : nz) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

/// Matrices over K whose entries are all rational are reduced in Q.
inline std::vector<int> rref_in_place(MatrixX<FieldElem>& m) {
  FieldPtr field;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_rational()) return rref_in_place<FieldElem>(m);
      if (!field && m(i, j).field()) field = m(i, j).field();
    }
  MatrixX<Rational> q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = m(i, j).rational_value();
  std::vector<int> pivots = rref_in_place<Rational>(q);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = field ? FieldElem::from_rational(field, q(i, j)) : FieldElem(q(i, j));
  return pivots;
}

template <typename Derived>
auto rref(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = a;
  std::vector<int> pivots = rref_in_place(m);
  m.conservativeResize(static_cast<Eigen::Index>(pivots.size()), Eigen::NoChange);
  return std::make_pair(m, pivots);
}

template <typename Derived>
int rank(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = a;
  return static_cast<int>(rref_in_place(m).size());
}

/// Null space basis as columns. Each basis vector has a 1 in one free column
/// and 0 in the others, so the result is canonical.
template <typename Derived>
auto kernel(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = a;
  const std::vector<int> pivots = rref_in_place(m);
  const Eigen::Index cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  MatrixX<Scalar> k = MatrixX<Scalar>::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const Eigen::Index fc = free_cols[f];
    k(fc, f) = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (!scalar_is_zero(m(i, fc))) k(pivots[i], f) = -m(i, fc);
    }
  }
  return k;
}

/// Some solution x of a x = b (b may have several columns), or nullopt.
template <typename DA, typename DB>
auto solve(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b)
    -> std::optional<MatrixX<typename DA::Scalar>> {
  using Scalar = typename DA::Scalar;
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: row counts differ");
  MatrixX<Scalar> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  const std::vector<int> pivots = rref_in_place(aug);
  MatrixX<Scalar> x = MatrixX<Scalar>::Zero(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols()) return std::nullopt;
    for (Eigen::Index j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(i, a.cols() + j);
  }
  return x;
}

template <typename Derived>
auto inverse(const Eigen::MatrixBase<Derived>& a) -> std::optional<MatrixX<typename Derived::Scalar>> {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const Eigen::Index n = a.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug << a, MatrixX<Scalar>::Identity(n, n);
  const std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] >= n)) return std::nullopt;
  return MatrixX<Scalar>(aug.rightCols(n));
}

template <typename Derived>
auto determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  MatrixX<Scalar> m = a;
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && scalar_is_zero(m(p, c))) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det = det * m(c, c);
    const Scalar inv = scalar_inverse(m(c, c));
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (scalar_is_zero(m(i, c))) continue;
      const Scalar f = m(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j)
        if (!scalar_is_zero(m(c, j))) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Basis (as columns) of the column space, taken from the original columns.
template <typename Derived>
auto column_space(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = a;
  const std::vector<int> pivots = rref_in_place(m);
  MatrixX<Scalar> out(a.rows(), static_cast<Eigen::Index>(pivots.size()));
  for (std::size_t i = 0; i < pivots.size(); ++i) out.col(i) = a.col(pivots[i]);
  return out;
}

/// True when the column spans of a and b coincide over the field.
template <typename DA, typename DB>
bool same_column_space(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  if (a.rows() != b.rows()) return false;
  const int ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  MatrixX<Scalar> ab(a.rows(), a.cols() + b.cols());
  ab << a, b;
  return rank(ab) == ra;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!scalar_is_zero(a(i, j))) return false;
  return true;
}

template <typename DA, typename DB>
bool matrices_equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// Kronecker product, entry (i*rb + k, j*cb + l) = a(i,j) * b(k,l).
template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (scalar_is_zero(a(i, j))) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          if (!scalar_is_zero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// Product that skips zero entries; much cheaper than Eigen's dense product
/// for the sparse structure matrices used throughout.
template <typename DA, typename DB>
auto sparse_product(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "product: inner dimensions differ");
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows(), b.cols());
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    std::vector<Eigen::Index> nzb;
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (!scalar_is_zero(b(k, j))) nzb.push_back(j);
    if (nzb.empty()) continue;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (scalar_is_zero(a(i, k))) continue;
      for (Eigen::Index j : nzb) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

}  // namespace hopftwist
