#pragma once

// Exact elimination over a field. Dense routines take any Eigen expression and
// work in its scalar type; nothing here compares against a tolerance.

#include <Eigen/Dense>

#include <boost/multiprecision/eigen.hpp>

#include <map>
#include <utility>
#include <vector>

namespace markedbrauer {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Reduced row echelon form in place; returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> rref_in_place(DenseMatrix<Scalar>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < a.rows() && a(piv, col) == Scalar(0)) ++piv;
    if (piv == a.rows()) continue;
    a.row(piv).swap(a.row(row));
    Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == Scalar(0)) continue;
      Scalar f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  DenseMatrix<typename Derived::Scalar> a = m;
  return static_cast<Eigen::Index>(rref_in_place(a).size());
}

/// Columns form a basis of {x : m x = 0}; one basis vector per free column,
/// with a 1 in that column.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> a = m;
  auto pivots = rref_in_place(a);
  std::vector<char> is_pivot(static_cast<std::size_t>(a.cols()), 0);
  for (auto c : pivots) is_pivot[c] = 1;
  DenseMatrix<Scalar> out(a.cols(), a.cols() - static_cast<Eigen::Index>(pivots.size()));
  out.setZero();
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    out(free, k) = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) out(pivots[i], k) = -a(static_cast<Eigen::Index>(i), free);
    ++k;
  }
  return out;
}

/// Inverse by Gauss-Jordan; returns false when singular.
template <typename Derived>
bool exact_inverse(const Eigen::MatrixBase<Derived>& m, DenseMatrix<typename Derived::Scalar>& out) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  DenseMatrix<Scalar> a(n, 2 * n);
  a.leftCols(n) = m;
  a.rightCols(n) = DenseMatrix<Scalar>::Identity(n, n);
  auto pivots = rref_in_place(a);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1)) return false;
  out = a.rightCols(n);
  return true;
}

/// Sparse row vector: strictly increasing column indices, no zeros.
template <typename Scalar>
using SparseRow = std::vector<std::pair<Eigen::Index, Scalar>>;

/// Incremental row echelon form for large sparse systems. Rows are reduced
/// against stored pivot rows as they arrive, so only independent rows are kept.
template <typename Scalar>
class SparseEchelon {
 public:
  /// Returns true when `row` was independent of the rows seen so far.
  bool add_row(SparseRow<Scalar> row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        Scalar inv = Scalar(1) / row.front().second;
        for (auto& e : row) e.second *= inv;
        Eigen::Index lead = row.front().first;
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      row = axpy(row, -row.front().second, it->second);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  // a + f * b
  static SparseRow<Scalar> axpy(const SparseRow<Scalar>& a, const Scalar& f, const SparseRow<Scalar>& b) {
    SparseRow<Scalar> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, f * b[j].second);
        ++j;
      } else {
        Scalar v = a[i].second + f * b[j].second;
        if (v != Scalar(0)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<Eigen::Index, SparseRow<Scalar>> pivots_;
};

}  // namespace markedbrauer
