#include "sonckit/geometry.hpp"

#include <algorithm>

#include "sonckit/linalg.hpp"
#include "sonckit/lp.hpp"

namespace sonckit {

Rational Simplex::coordinate_of(const Exponent& alpha) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == alpha) return barycentric[i];
  return Rational(0);
}

bool Simplex::has_vertex(const Exponent& alpha) const {
  return std::any_of(vertices.begin(), vertices.end(), [&](const Exponent& v) { return v == alpha; });
}

std::size_t SupportPartition::family_size(const Exponent& beta) const {
  const auto it = simplex_families.find(beta);
  return it == simplex_families.end() ? 0 : it->second.size();
}

ExponentSet SupportPartition::covering_squares() const {
  ExponentSet out;
  for (const auto& a : s_set)
    if (!r_set.count(a)) out.insert(a);
  return out;
}

ExponentSet monomial_square_exponents(const SparseForm& f) {
  ExponentSet s;
  for (const auto& [e, c] : f.terms())
    if (c > 0 && is_even(e)) s.insert(e);
  return s;
}

ExponentSet hull_vertices(const ExponentSet& points) {
  ExponentSet vertices;
  const ExponentList all(points.begin(), points.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    ExponentList others;
    others.reserve(all.size() - 1);
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != i) others.push_back(all[j]);
    if (!in_convex_hull(all[i], others)) vertices.insert(all[i]);
  }
  return vertices;
}

std::optional<std::vector<Rational>> barycentric_coordinates(const Exponent& beta, const ExponentList& vertices) {
  const AffineCoordinates solver(vertices);
  const auto lambda = solver(beta);
  if (!lambda) return std::nullopt;
  std::vector<Rational> out(lambda->data(), lambda->data() + lambda->size());
  for (const auto& l : out)
    if (l <= 0) return std::nullopt;
  return out;
}

namespace {

void enumerate_subsets(const Exponent& beta, const ExponentList& candidates, std::size_t start,
                       std::size_t max_size, ExponentList& current, std::vector<Simplex>& out) {
  for (std::size_t i = start; i < candidates.size(); ++i) {
    current.push_back(candidates[i]);
    // Supersets of a dependent set are dependent as well.
    if (affinely_independent(current)) {
      if (auto lambda = barycentric_coordinates(beta, current)) out.push_back(Simplex{current, std::move(*lambda)});
      if (current.size() < max_size) enumerate_subsets(beta, candidates, i + 1, max_size, current, out);
    }
    current.pop_back();
  }
}

}  // namespace

std::vector<Simplex> enumerate_simplices(const Exponent& beta, const ExponentSet& candidates,
                                         const GeometryOptions& options) {
  if (candidates.size() > options.max_candidates)
    throw CapExceeded(std::to_string(candidates.size()) + " candidate vertices for " + to_string(beta) +
                      " exceed the cap of " + std::to_string(options.max_candidates));
  const ExponentList list(candidates.begin(), candidates.end());  // already in canonical order
  std::vector<Simplex> out;
  ExponentList current;
  const std::size_t max_size = static_cast<std::size_t>(beta.size()) + 1;
  enumerate_subsets(beta, list, 0, max_size, current, out);
  std::sort(out.begin(), out.end(),
            [](const Simplex& a, const Simplex& b) { return list_less(a.vertices, b.vertices); });
  return out;
}

SupportPartition support_partition(const SparseForm& f, const GeometryOptions& options) {
  if (f.is_zero()) throw ZeroFormInput();
  SupportPartition p;
  p.s_set = monomial_square_exponents(f);
  for (const auto& [e, c] : f.terms())
    if (!p.s_set.count(e)) p.i_set.insert(e);
  p.vertices = hull_vertices(f.support());
  ExponentSet used;
  for (const auto& beta : p.i_set) {
    auto family = enumerate_simplices(beta, p.s_set, options);
    for (const auto& simplex : family)
      for (const auto& v : simplex.vertices) used.insert(v);
    p.simplex_families.emplace(beta, std::move(family));
  }
  for (const auto& a : p.s_set)
    if (!used.count(a)) p.r_set.insert(a);
  return p;
}

namespace {

// Calls visit(point) for every integer point of the box [lo, hi].
template <typename Visit>
void scan_box(const Exponent& lo, const Exponent& hi, Visit&& visit) {
  Exponent p = lo;
  const Eigen::Index n = lo.size();
  if ((hi.array() < lo.array()).any()) return;
  for (;;) {
    visit(p);
    Eigen::Index i = n - 1;
    while (i >= 0 && p[i] == hi[i]) {
      p[i] = lo[i];
      --i;
    }
    if (i < 0) return;
    ++p[i];
  }
}

std::pair<Exponent, Exponent> bounding_box(const ExponentSet& points) {
  Exponent lo = points.begin()->cast<int>(), hi = lo;
  for (const auto& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return {lo, hi};
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace

ExponentSet lattice_points(const ExponentList& simplex_vertices) {
  const AffineCoordinates solver(simplex_vertices);
  const ExponentSet as_set(simplex_vertices.begin(), simplex_vertices.end());
  const auto [lo, hi] = bounding_box(as_set);
  ExponentSet out;
  scan_box(lo, hi, [&](const Exponent& p) {
    const auto lambda = solver(p);
    if (lambda && (lambda->array() >= Rational(0)).all()) out.insert(p);
  });
  return out;
}

ExponentSet hull_lattice_points(const ExponentSet& points, int divisor) {
  if (points.empty()) return {};
  auto [lo, hi] = bounding_box(points);
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    lo[i] = ceil_div(lo[i], divisor);
    hi[i] = floor_div(hi[i], divisor);
  }
  // Points on a common degree hyperplane restrict the scan to that hyperplane.
  std::optional<int> level;
  {
    const int d0 = points.begin()->sum();
    if (std::all_of(points.begin(), points.end(), [&](const Exponent& p) { return p.sum() == d0; }))
      level = d0;
  }
  const ExponentList list(points.begin(), points.end());
  ExponentSet out;
  scan_box(lo, hi, [&](const Exponent& p) {
    if (level && p.sum() * divisor != *level) return;
    if (in_convex_hull(p, list, divisor)) out.insert(p);
  });
  return out;
}

ExponentSet half_newton_vertices(const SparseForm& f) {
  if (f.degree() % 2 != 0) throw OddDegree("form of odd degree " + std::to_string(f.degree()));
  if (f.is_zero()) return {};
  ExponentSet out;
  for (const auto& v : hull_vertices(f.support())) {
    if (!is_even(v)) throw OddDegree("vertex " + to_string(v) + " has odd entries; 1/2 New(f) is not integral");
    out.insert(v / 2);
  }
  return out;
}

ExponentSet half_newton_support(const SparseForm& f) {
  if (f.degree() % 2 != 0) throw OddDegree("form of odd degree " + std::to_string(f.degree()));
  if (f.is_zero()) return {};
  return hull_lattice_points(hull_vertices(f.support()), 2);
}

PsdPrecheck psd_newton_precheck(const SparseForm& f) {
  PsdPrecheck out;
  if (f.is_zero()) return out;
  const auto squares = monomial_square_exponents(f);
  for (const auto& v : hull_vertices(f.support())) {
    if (!squares.count(v)) {
      out.pass = false;
      out.witness = v;
      break;
    }
  }
  return out;
}

}  // namespace sonckit
