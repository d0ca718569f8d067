#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sonckit/linalg.hpp"
#include "sonckit/lp.hpp"

using namespace sonckit;

namespace {

RationalMatrix matrix(int rows, int cols, std::initializer_list<long> entries) {
  RationalMatrix m(rows, cols);
  auto it = entries.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Rational(*it++);
  return m;
}

ExponentList random_points(std::mt19937& rng, int n, int count, int hi) {
  std::uniform_int_distribution<int> coord(0, hi);
  ExponentList pts;
  for (int k = 0; k < count; ++k) {
    Exponent e(n);
    for (int i = 0; i < n; ++i) e[i] = coord(rng);
    pts.push_back(e);
  }
  return pts;
}

}  // namespace

TEST_CASE("row echelon form and rank") {
  const RationalMatrix a = matrix(3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 1});
  const auto ech = row_echelon<Rational>(a);
  CHECK(ech.rank() == 2);
  CHECK(ech.pivot_columns == std::vector<Eigen::Index>{0, 1});
  CHECK(exact_rank<Rational>(RationalMatrix::Identity(4, 4)) == 4);
  CHECK(exact_rank<Rational>(RationalMatrix::Zero(2, 3)) == 0);
}

TEST_CASE("exact solves, inverses and kernels") {
  const RationalMatrix a = matrix(2, 2, {2, 1, 1, 3});
  RationalVector b(2);
  b << 3, 5;
  const auto x = solve_exact<Rational>(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  CHECK((*x)[0] == make_rational(4, 5));

  const RationalMatrix inv = exact_inverse<Rational>(a);
  CHECK(a * inv == RationalMatrix::Identity(2, 2));
  CHECK_THROWS_AS(exact_inverse<Rational>(matrix(2, 2, {1, 2, 2, 4})), DimensionMismatch);
  CHECK_THROWS_AS(exact_inverse<Rational>(RationalMatrix::Zero(2, 3)), DimensionMismatch);

  const RationalMatrix singular = matrix(2, 3, {1, 2, 3, 2, 4, 6});
  RationalVector inconsistent(2);
  inconsistent << 1, 3;
  CHECK_FALSE(solve_exact<Rational>(singular, inconsistent));

  const RationalMatrix k = exact_kernel<Rational>(singular);
  CHECK(k.cols() == 2);
  CHECK((singular * k).isZero());
  CHECK(exact_rank<Rational>(k) == 2);
}

TEST_CASE("affine independence and affine coordinates") {
  ExponentList tri{make_exponent({4, 2, 0}), make_exponent({2, 4, 0}), make_exponent({0, 0, 6})};
  CHECK(affinely_independent(tri));
  ExponentList line{make_exponent({2, 0}), make_exponent({1, 1}), make_exponent({0, 2})};
  CHECK_FALSE(affinely_independent(line));
  CHECK(affinely_independent({make_exponent({1, 1})}));

  const AffineCoordinates coords(tri);
  const auto l = coords(make_exponent({2, 2, 2}));
  REQUIRE(l);
  for (Eigen::Index i = 0; i < 3; ++i) CHECK((*l)[i] == make_rational(1, 3));
  CHECK_FALSE(coords(make_exponent({2, 2, 3})));  // other degree, off the affine hull
  CHECK_THROWS_AS(AffineCoordinates{line}, AffinelyDependentInput);
}

TEST_CASE("phase-one simplex feasibility") {
  // x + y = 1, x - y = 3 has the unique solution (2, -1): infeasible for x >= 0.
  const RationalMatrix a = matrix(2, 2, {1, 1, 1, -1});
  RationalVector b(2);
  b << 1, 3;
  CHECK_FALSE(find_nonnegative_solution<Rational>(a, b));
  b << 3, 1;
  const auto x = find_nonnegative_solution<Rational>(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);

  // Degenerate system with redundant rows.
  const RationalMatrix d = matrix(3, 3, {1, 1, 1, 1, 1, 1, 0, 1, 1});
  RationalVector e(3);
  e << 1, 1, 0;
  const auto y = find_nonnegative_solution<Rational>(d, e);
  REQUIRE(y);
  CHECK(d * *y == e);
  for (Eigen::Index i = 0; i < y->size(); ++i) CHECK((*y)[i] >= 0);
}

TEST_CASE("convex hull membership") {
  ExponentList tri{make_exponent({4, 2, 0}), make_exponent({2, 4, 0}), make_exponent({0, 0, 6})};
  CHECK(in_convex_hull(make_exponent({2, 2, 2}), tri));
  CHECK_FALSE(in_convex_hull(make_exponent({3, 3, 0}), {tri[2]}));
  CHECK(in_convex_hull(make_exponent({1, 1, 1}), tri, 2));
  CHECK_FALSE(in_convex_hull(make_exponent({1, 1, 1}), {}));
}

TEST_CASE("hull membership agrees with the Caratheodory oracle") {
  std::mt19937 rng(11);
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + round % 2;
    const auto pts = random_points(rng, n, 5, 4);
    const auto probe = random_points(rng, n, 1, 4).front();
    INFO("round " << round);
    CHECK(in_convex_hull(probe, pts) == oracle::in_hull(probe, pts));
  }
}
