// Exact dense linear algebra over any field-like or Euclidean scalar.
//
// Eigen's decompositions choose pivots by magnitude and compare against an
// epsilon, which is meaningless for exact scalars. The routines here pivot on
// the first nonzero entry and never round.
#pragma once

#include "kmjm/number.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace kmjm::linalg {

/// Fraction-free (Bareiss) determinant. Every division is exact, so this works
/// unchanged for Integer and Rational.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Determinants of the leading k x k blocks, k = 1..n.
template <typename Scalar>
std::vector<Scalar> leading_principal_minors(const Matrix<Scalar>& m) {
  std::vector<Scalar> minors;
  minors.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index k = 1; k <= m.rows(); ++k) {
    minors.push_back(determinant<Scalar>(m.topLeftCorner(k, k)));
  }
  return minors;
}

/// Reduced row echelon form over the rationals; returns the pivot columns.
inline std::vector<Eigen::Index> reduce_in_place(RatMatrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) {
        if (m(row, j) != 0) m(i, j) -= factor * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& m) {
  RatMatrix work = m.template cast<Rational>();
  return static_cast<Eigen::Index>(reduce_in_place(work).size());
}

/// The unique solution of a x = b, or nullopt when a is singular.
template <typename Scalar>
std::optional<RatVector> solve(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  RatMatrix aug(n, n + 1);
  aug.leftCols(n) = a.template cast<Rational>();
  aug.col(n) = b.template cast<Rational>();
  const auto pivots = reduce_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots.back() >= n)) {
    return std::nullopt;
  }
  return RatVector(aug.col(n));
}

}  // namespace kmjm::linalg
