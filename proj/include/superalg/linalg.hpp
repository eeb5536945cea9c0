#pragma once

// Exact linear algebra over a field scalar (Rational in practice). Everything
// here is plain Gauss-Jordan elimination; results are canonical (reduced row
// echelon form with left-to-right pivots), so two runs on equal input produce
// identical output.

#include "superalg/errors.hpp"
#include "superalg/rational.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace superalg {

template <typename Scalar>
struct Echelon {
  /// rank() rows of the reduced row echelon form, zero rows dropped.
  MatrixX<Scalar> reduced;
  /// Pivot column of each row of `reduced`, strictly increasing.
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

namespace detail {

template <typename Scalar>
using RowMajorX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
bool nonzero(const Scalar& s) {
  return s != Scalar(0);
}

}  // namespace detail

/// Reduced row echelon form by Gauss-Jordan elimination.
template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::RowMajorX<Scalar> a = m;
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Index> pivots;
  std::vector<Index> support;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && !detail::nonzero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));

    const Scalar inv = Scalar(1) / a(r, c);
    support.clear();
    for (Index j = c; j < cols; ++j) {
      if (detail::nonzero(a(r, j))) {
        a(r, j) *= inv;
        support.push_back(j);
      }
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || !detail::nonzero(a(i, c))) continue;
      const Scalar f = a(i, c);
      for (Index j : support) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon<Scalar> out;
  out.reduced = a.topRows(r);
  out.pivots = std::move(pivots);
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Canonical nullspace basis: one vector per free column (ascending), that
/// free variable set to 1, the other free variables 0.
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto e = rref(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<VectorX<Scalar>> basis;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Zero(cols);
    v(f) = Scalar(1);
    for (Index i = 0; i < e.rank(); ++i) v(e.pivots[static_cast<std::size_t>(i)]) = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coefficients c with sum_i c_i * basis[i] == v, or nullopt when v is not in
/// the span. With a dependent basis the coefficients of non-pivot members are 0.
template <typename Scalar>
std::optional<VectorX<Scalar>> span_contains(const std::vector<VectorX<Scalar>>& basis,
                                             const VectorX<Scalar>& v) {
  const Index n = v.size();
  const Index k = static_cast<Index>(basis.size());
  for (const auto& b : basis)
    if (b.size() != n)
      throw DimensionMismatch("span_contains: vectors of length " + std::to_string(b.size()) +
                              " and " + std::to_string(n));
  if (k == 0) {
    if ((v.array() == Scalar(0)).all()) return VectorX<Scalar>(0);
    return std::nullopt;
  }
  MatrixX<Scalar> aug(n, k + 1);
  for (Index j = 0; j < k; ++j) aug.col(j) = basis[static_cast<std::size_t>(j)];
  aug.col(k) = v;
  const auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  VectorX<Scalar> coeffs = VectorX<Scalar>::Zero(k);
  for (Index i = 0; i < e.rank(); ++i) coeffs(e.pivots[static_cast<std::size_t>(i)]) = e.reduced(i, k);
  return coeffs;
}

template <typename Derived>
MatrixX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const Index n = m.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug << m, MatrixX<Scalar>::Identity(n, n);
  const auto e = rref(aug);
  if (e.rank() < n || (n > 0 && e.pivots[static_cast<std::size_t>(n - 1)] != n - 1))
    throw SingularMap("matrix is singular");
  return e.reduced.rightCols(n);
}

/// Bounds-checked entry access; Eigen's operator() only asserts in debug builds.
template <typename Derived>
const typename Derived::Scalar& entry(const Eigen::MatrixBase<Derived>& m, Index row, Index col) {
  if (row < 0 || col < 0 || row >= m.rows() || col >= m.cols())
    throw OutOfBounds("entry (" + std::to_string(row) + "," + std::to_string(col) +
                      ") outside " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  return m.derived().coeff(row, col);
}

template <typename Derived>
bool is_nilpotent(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionMismatch("nilpotency of a non-square matrix");
  MatrixX<Scalar> power = m;
  for (Index k = 1; k < m.rows(); ++k) {
    if ((power.array() == Scalar(0)).all()) return true;
    power = power * m;
  }
  return (power.array() == Scalar(0)).all();
}

/// Jordan block sizes of a nilpotent matrix, descending. The number of blocks
/// of size >= k is rank(M^(k-1)) - rank(M^k).
template <typename Derived>
std::vector<Index> nilpotent_jordan_blocks(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionMismatch("Jordan blocks of a non-square matrix");
  const Index n = m.rows();
  std::vector<Index> ranks{n};
  MatrixX<Scalar> power = MatrixX<Scalar>::Identity(n, n);
  while (ranks.back() > 0) {
    if (static_cast<Index>(ranks.size()) > n) throw NotNilpotent("matrix power M^n is nonzero");
    power = power * m;
    ranks.push_back(rank(power));
    if (ranks.back() == ranks[ranks.size() - 2]) throw NotNilpotent("rank sequence stalls above zero");
  }
  std::vector<Index> at_least;  // at_least[k-1] = #blocks of size >= k
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
  std::vector<Index> sizes;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const Index next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (Index c = 0; c < at_least[k] - next; ++c) sizes.push_back(static_cast<Index>(k + 1));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace superalg
