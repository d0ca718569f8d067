#pragma once

// Brute-force reference implementations for the tests. They deliberately
// share no code with the library beyond the scalar and exponent types.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "sonckit/exponent.hpp"
#include "sonckit/form.hpp"
#include "sonckit/rational.hpp"

namespace oracle {

using sonckit::Exponent;
using sonckit::ExponentList;
using sonckit::ExponentSet;
using sonckit::Rational;

using Row = std::vector<Rational>;
using Mat = std::vector<Row>;

// Solves A x = b by plain Gaussian elimination. Returns nullopt when the
// system is inconsistent or has more than one solution.
inline std::optional<Row> unique_solution(Mat a, Row b) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;  // free column
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= cols; ++j) a[i][j] -= factor * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  if (r < cols) return std::nullopt;
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  Row x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = a[i][cols] / a[i][pivots[i]];
  return x;
}

// Barycentric coordinates of p with respect to the given points, if unique.
inline std::optional<Row> barycentric(const Exponent& p, const ExponentList& pts) {
  const std::size_t n = static_cast<std::size_t>(p.size());
  Mat a(n + 1, Row(pts.size()));
  Row b(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) a[i][j] = pts[j][static_cast<Eigen::Index>(i)];
    b[i] = p[static_cast<Eigen::Index>(i)];
  }
  for (std::size_t j = 0; j < pts.size(); ++j) a[n][j] = 1;
  b[n] = 1;
  return unique_solution(a, b);
}

template <typename Fn>
void for_each_subset(std::size_t n, std::size_t max_size, Fn&& fn) {
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!idx.empty()) fn(idx);
    if (idx.size() == max_size) return;
    for (std::size_t i = start; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

// p in conv(pts) by Caratheodory: some subset of at most n+1 points has unique
// nonnegative barycentric coordinates for p.
inline bool in_hull(const Exponent& p, const ExponentList& pts) {
  const std::size_t max_size = static_cast<std::size_t>(p.size()) + 1;
  bool found = false;
  for_each_subset(pts.size(), max_size, [&](const std::vector<std::size_t>& idx) {
    if (found) return;
    ExponentList sub;
    for (auto i : idx) sub.push_back(pts[i]);
    if (auto l = barycentric(p, sub))
      if (std::all_of(l->begin(), l->end(), [](const Rational& v) { return v >= 0; })) found = true;
  });
  return found;
}

inline ExponentSet hull_vertices(const ExponentSet& points) {
  ExponentSet out;
  for (const auto& p : points) {
    ExponentList others;
    for (const auto& q : points)
      if (q != p) others.push_back(q);
    if (!in_hull(p, others)) out.insert(p);
  }
  return out;
}

inline ExponentSet box_lattice_points(const ExponentSet& points, int divisor = 1) {
  const Eigen::Index n = points.begin()->size();
  Exponent hi = *points.begin();
  for (const auto& p : points) hi = hi.cwiseMax(p);
  ExponentList pts(points.begin(), points.end());
  const int degree = pts.front().sum();
  const bool same_degree = std::all_of(pts.begin(), pts.end(), [&](const Exponent& p) { return p.sum() == degree; });
  ExponentSet out;
  Exponent q = Exponent::Zero(n);
  for (;;) {
    // Points of another degree cannot be convex combinations of points of one degree.
    if ((!same_degree || q.sum() * divisor == degree) && in_hull(q * divisor, pts)) out.insert(q);
    Eigen::Index i = 0;
    while (i < n && ++q[i] * divisor > hi[i]) q[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline bool is_midpoint(const Exponent& q, const ExponentSet& l) {
  for (const auto& s : l)
    for (const auto& t : l) {
      if (s == t) continue;
      bool even = true;
      for (Eigen::Index i = 0; i < s.size(); ++i) even = even && s[i] % 2 == 0 && t[i] % 2 == 0;
      if (even && s + t == 2 * q) return true;
    }
  return false;
}

inline bool mediated(const ExponentSet& delta, const ExponentSet& l) {
  for (const auto& d : delta)
    if (!l.count(d)) return false;
  for (const auto& q : l)
    if (!delta.count(q) && !is_midpoint(q, l)) return false;
  return true;
}

// Simultaneous rounds: L <- Delta u (L n Mid(L)) until stable.
inline ExponentSet mms_rounds(const ExponentSet& delta, ExponentSet l) {
  for (;;) {
    ExponentSet next;
    for (const auto& q : l)
      if (delta.count(q) || is_midpoint(q, l)) next.insert(q);
    if (next == l) return l;
    l = std::move(next);
  }
}

// Union of all Delta-mediated subsets of the lattice (mediated sets are closed
// under union, so this is the maximal one). Exponential; small inputs only.
inline ExponentSet mms_exhaustive(const ExponentSet& delta, const ExponentSet& lattice) {
  std::vector<Exponent> free;
  for (const auto& q : lattice)
    if (!delta.count(q)) free.push_back(q);
  ExponentSet best = delta;
  const std::size_t count = std::size_t{1} << free.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    ExponentSet l = delta;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask & (std::size_t{1} << i)) l.insert(free[i]);
    if (mediated(delta, l)) best.insert(l.begin(), l.end());
  }
  return best;
}

// Naive evaluation: every monomial as a product of repeated multiplications.
inline Rational evaluate(const sonckit::SparseForm& f, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (Eigen::Index i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= x[static_cast<std::size_t>(i)];
    total += term;
  }
  return total;
}

inline std::vector<Rational> random_point(std::mt19937& rng, int n, int range = 3, int max_den = 4) {
  std::uniform_int_distribution<int> num(-range * max_den, range * max_den), den(1, max_den);
  std::vector<Rational> x;
  for (int i = 0; i < n; ++i) {
    const int d = den(rng);
    std::uniform_int_distribution<int> scaled(-range * d, range * d);
    x.push_back(sonckit::make_rational(sonckit::Integer(scaled(rng)), sonckit::Integer(d)));
  }
  (void)num;
  return x;
}

inline sonckit::RationalVector to_vector(const std::vector<Rational>& x) {
  sonckit::RationalVector v(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) v[static_cast<Eigen::Index>(i)] = x[i];
  return v;
}

}  // namespace oracle
