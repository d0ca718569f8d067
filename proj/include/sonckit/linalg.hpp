#pragma once

// Exact dense linear algebra over a field scalar. Pivoting only tests for
// nonzero entries, so these kernels are meant for exact scalars (Rational);
// Eigen's own decompositions are used where floating point is acceptable.

#include <optional>
#include <utility>
#include <vector>

#include "sonckit/errors.hpp"
#include "sonckit/exponent.hpp"
#include "sonckit/rational.hpp"

namespace sonckit {

/// Row-reduced echelon form of a matrix, with the pivot column of each row.
template <typename Scalar>
struct RowEchelon {
  MatrixX<Scalar> reduced;
  std::vector<Eigen::Index> pivot_columns;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_columns.size()); }
};

/// Gauss-Jordan elimination. Only the first `pivot_limit` columns are eligible
/// as pivots (defaults to all), which lets callers reduce augmented systems.
template <typename Scalar>
RowEchelon<Scalar> row_echelon(MatrixX<Scalar> m, Eigen::Index pivot_limit = -1) {
  if (pivot_limit < 0) pivot_limit = m.cols();
  RowEchelon<Scalar> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < pivot_limit && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Scalar>
Eigen::Index exact_rank(const MatrixX<Scalar>& m) {
  return row_echelon<Scalar>(m).rank();
}

/// Solves A x = b exactly. Returns nullopt when the system is inconsistent;
/// free variables are set to zero.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve_exact(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto ech = row_echelon<Scalar>(aug, a.cols());
  for (Eigen::Index r = ech.rank(); r < aug.rows(); ++r)
    if (ech.reduced(r, a.cols()) != 0) return std::nullopt;
  VectorX<Scalar> x = VectorX<Scalar>::Zero(a.cols());
  for (Eigen::Index r = 0; r < ech.rank(); ++r)
    x[ech.pivot_columns[static_cast<std::size_t>(r)]] = ech.reduced(r, a.cols());
  return x;
}

/// Exact inverse of a square matrix; throws DimensionMismatch when singular.
template <typename Scalar>
MatrixX<Scalar> exact_inverse(const MatrixX<Scalar>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const Eigen::Index n = a.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug << a, MatrixX<Scalar>::Identity(n, n);
  const auto ech = row_echelon<Scalar>(aug, n);
  if (ech.rank() != n) throw DimensionMismatch("matrix is singular");
  return ech.reduced.rightCols(n);
}

/// Basis of the right null space, one vector per column.
template <typename Scalar>
MatrixX<Scalar> exact_kernel(const MatrixX<Scalar>& a) {
  const auto ech = row_echelon<Scalar>(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto c : ech.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(a.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    basis(f, static_cast<Eigen::Index>(k)) = Scalar(1);
    for (Eigen::Index r = 0; r < ech.rank(); ++r)
      basis(ech.pivot_columns[static_cast<std::size_t>(r)], static_cast<Eigen::Index>(k)) = -ech.reduced(r, f);
  }
  return basis;
}

/// Points as columns of a rational matrix.
inline RationalMatrix points_matrix(const ExponentList& points) {
  const Eigen::Index n = points.empty() ? 0 : points.front().size();
  RationalMatrix m(n, static_cast<Eigen::Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j)
    for (Eigen::Index i = 0; i < n; ++i) m(i, static_cast<Eigen::Index>(j)) = points[j][i];
  return m;
}

/// Affine independence via the rank of the difference vectors.
inline bool affinely_independent(const ExponentList& points) {
  if (points.size() <= 1) return true;
  const Eigen::Index n = points.front().size();
  if (static_cast<Eigen::Index>(points.size()) > n + 1) return false;
  RationalMatrix diff(n, static_cast<Eigen::Index>(points.size() - 1));
  for (std::size_t j = 1; j < points.size(); ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      diff(i, static_cast<Eigen::Index>(j - 1)) = points[j][i] - points[0][i];
  return exact_rank<Rational>(diff) == diff.cols();
}

/// Solver for affine coordinates with respect to a fixed affinely independent
/// vertex list. Factorizes once, then answers queries with a matrix-vector
/// product and an exact residual check.
class AffineCoordinates {
 public:
  explicit AffineCoordinates(const ExponentList& vertices) : vertices_(vertices) {
    if (vertices.empty()) throw AffinelyDependentInput("empty vertex list");
    if (!affinely_independent(vertices))
      throw AffinelyDependentInput("vertex list is affinely dependent");
    const Eigen::Index n = vertices.front().size();
    const auto k = static_cast<Eigen::Index>(vertices.size());
    system_.resize(n + 1, k);
    system_.topRows(n) = points_matrix(vertices);
    system_.row(n).setConstant(Rational(1));
    // Pick k linearly independent rows; their square block is invertible.
    const auto ech = row_echelon<Rational>(RationalMatrix(system_.transpose()));
    rows_ = ech.pivot_columns;
    RationalMatrix square(k, k);
    for (Eigen::Index r = 0; r < k; ++r) square.row(r) = system_.row(rows_[static_cast<std::size_t>(r)]);
    inverse_ = exact_inverse<Rational>(square);
  }

  /// Coordinates lambda with sum 1 and sum lambda_i v_i = point, or nullopt if
  /// the point is not in the affine hull.
  std::optional<RationalVector> operator()(const Exponent& point) const {
    const Eigen::Index n = point.size();
    RationalVector rhs(n + 1);
    for (Eigen::Index i = 0; i < n; ++i) rhs[i] = point[i];
    rhs[n] = 1;
    RationalVector picked(static_cast<Eigen::Index>(rows_.size()));
    for (std::size_t r = 0; r < rows_.size(); ++r) picked[static_cast<Eigen::Index>(r)] = rhs[rows_[r]];
    RationalVector lambda = inverse_ * picked;
    if (system_ * lambda != rhs) return std::nullopt;
    return lambda;
  }

  const ExponentList& vertices() const { return vertices_; }

 private:
  ExponentList vertices_;
  RationalMatrix system_;
  std::vector<Eigen::Index> rows_;
  RationalMatrix inverse_;
};

}  // namespace sonckit
