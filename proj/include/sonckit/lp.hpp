#pragma once

// Phase-one simplex method for exact feasibility of {A x = b, x >= 0}.
// Bland's rule is used for both the entering and the leaving variable, so the
// method terminates without cycling on degenerate problems.

#include <optional>
#include <vector>

#include "sonckit/exponent.hpp"
#include "sonckit/rational.hpp"

namespace sonckit {

template <typename Scalar>
std::optional<VectorX<Scalar>> find_nonnegative_solution(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  const Eigen::Index m = a.rows(), n = a.cols();
  // Tableau columns: n structural, m artificial, then the right-hand side.
  MatrixX<Scalar> t = MatrixX<Scalar>::Zero(m + 1, n + m + 1);
  for (Eigen::Index r = 0; r < m; ++r) {
    const bool flip = b[r] < 0;
    for (Eigen::Index c = 0; c < n; ++c) t(r, c) = flip ? Scalar(-a(r, c)) : a(r, c);
    t(r, n + r) = Scalar(1);
    t(r, n + m) = flip ? Scalar(-b[r]) : b[r];
  }
  // Objective row holds reduced costs of "minimize sum of artificials".
  for (Eigen::Index c = 0; c < n; ++c) {
    Scalar s(0);
    for (Eigen::Index r = 0; r < m; ++r) s -= t(r, c);
    t(m, c) = s;
  }
  {
    Scalar s(0);
    for (Eigen::Index r = 0; r < m; ++r) s -= t(r, n + m);
    t(m, n + m) = s;
  }
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index r = 0; r < m; ++r) basis[static_cast<std::size_t>(r)] = n + r;

  for (;;) {
    Eigen::Index entering = -1;
    for (Eigen::Index c = 0; c < n + m; ++c) {
      if (t(m, c) < 0) {
        entering = c;
        break;
      }
    }
    if (entering < 0) break;
    Eigen::Index leaving = -1;
    Scalar best_ratio(0);
    for (Eigen::Index r = 0; r < m; ++r) {
      if (t(r, entering) <= 0) continue;
      const Scalar ratio = t(r, n + m) / t(r, entering);
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leaving)])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) break;  // unbounded direction; cannot happen in phase one
    const Scalar inv = Scalar(1) / t(leaving, entering);
    t.row(leaving) *= inv;
    for (Eigen::Index r = 0; r <= m; ++r) {
      if (r == leaving || t(r, entering) == 0) continue;
      const Scalar factor = t(r, entering);
      t.row(r) -= factor * t.row(leaving);
    }
    basis[static_cast<std::size_t>(leaving)] = entering;
  }
  if (t(m, n + m) != 0) return std::nullopt;
  VectorX<Scalar> x = VectorX<Scalar>::Zero(n);
  for (Eigen::Index r = 0; r < m; ++r) {
    const Eigen::Index c = basis[static_cast<std::size_t>(r)];
    if (c < n) x[c] = t(r, n + m);
  }
  return x;
}

/// Exact test of point in conv(points), with the point scaled by
/// `point_scale` (2 tests membership of point/2 in conv(points)/2).
inline bool in_convex_hull(const Exponent& point, const ExponentList& points, int point_scale = 1) {
  if (points.empty()) return false;
  const Eigen::Index n = point.size();
  const auto k = static_cast<Eigen::Index>(points.size());
  RationalMatrix a(n + 1, k);
  RationalVector b(n + 1);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) = points[static_cast<std::size_t>(j)][i];
    a(n, j) = 1;
  }
  for (Eigen::Index i = 0; i < n; ++i) b[i] = point[i] * point_scale;
  b[n] = 1;
  return find_nonnegative_solution<Rational>(a, b).has_value();
}

}  // namespace sonckit
