#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sonckit/corpus.hpp"
#include "sonckit/geometry.hpp"
#include "sonckit/linalg.hpp"

using namespace sonckit;

namespace {

Exponent e(std::initializer_list<int> v) { return make_exponent(v); }
Rational q(long a, long b = 1) { return make_rational(Integer(a), Integer(b)); }

ExponentSet set_of(std::initializer_list<Exponent> v) { return ExponentSet(v.begin(), v.end()); }

// Random affinely independent even point sets of one common degree.
ExponentList random_even_simplex(std::mt19937& rng, int n, int k, int half_degree) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (;;) {
    ExponentList pts;
    for (int j = 0; j < k; ++j) {
      Exponent p = Exponent::Zero(n);
      for (int s = 0; s < half_degree; ++s) p[pick(rng)] += 2;
      pts.push_back(p);
    }
    const ExponentSet distinct(pts.begin(), pts.end());
    if (distinct.size() == pts.size() && affinely_independent(pts)) return pts;
  }
}

}  // namespace

TEST_CASE("support partition of the Motzkin form") {
  const auto p = support_partition(motzkin_form());
  CHECK(p.s_set == set_of({e({4, 2, 0}), e({2, 4, 0}), e({0, 0, 6})}));
  CHECK(p.i_set == set_of({e({2, 2, 2})}));
  CHECK(p.vertices == p.s_set);
  CHECK(p.r_set.empty());
  CHECK(p.family_size(e({2, 2, 2})) == 1);
  CHECK(p.family_size(e({4, 2, 0})) == 0);
  const auto& simplex = p.simplex_families.at(e({2, 2, 2})).front();
  for (const auto& l : simplex.barycentric) CHECK(l == q(1, 3));
}

TEST_CASE("support partition of the Robinson forms") {
  const auto p1 = support_partition(robinson1_form());
  CHECK(p1.s_set.size() == 4);
  CHECK(p1.i_set.size() == 6);
  CHECK(p1.r_set == set_of({e({2, 2, 2})}));
  CHECK(p1.covering_squares() == set_of({e({6, 0, 0}), e({0, 6, 0}), e({0, 0, 6})}));
  CHECK(p1.vertices == p1.covering_squares());
  const auto& family = p1.simplex_families.at(e({4, 2, 0}));
  REQUIRE(family.size() == 1);
  CHECK(family[0].coordinate_of(e({6, 0, 0})) == q(2, 3));
  CHECK(family[0].coordinate_of(e({0, 6, 0})) == q(1, 3));
  CHECK(family[0].coordinate_of(e({0, 0, 6})) == 0);
  CHECK_FALSE(family[0].has_vertex(e({0, 0, 6})));

  const auto p2 = support_partition(robinson2_form());
  CHECK(p2.covering_squares() == set_of({e({4, 0, 0, 0}), e({2, 0, 0, 2}), e({0, 4, 0, 0}), e({0, 2, 0, 2}),
                                         e({0, 0, 4, 0}), e({0, 0, 2, 2})}));
  CHECK(p2.vertices == oracle::hull_vertices(robinson2_form().support()));
}

TEST_CASE("simplex families are ordered and complete") {
  const auto p = support_partition(p_family_form(2, 6));
  const auto& family = p.simplex_families.at(e({3, 3}));
  REQUIRE(family.size() == 2);
  CHECK(list_less(family[0].vertices, family[1].vertices));
  // Both simplices are segments through (3,3) ending in (2,4).
  std::vector<Rational> at_24;
  for (const auto& s : family) at_24.push_back(s.coordinate_of(e({2, 4})));
  std::sort(at_24.begin(), at_24.end());
  CHECK(at_24 == std::vector<Rational>{q(1, 2), q(3, 4)});
}

TEST_CASE("barycentric coordinates") {
  const ExponentList seg{e({6, 0}), e({0, 6})};
  const auto l = barycentric_coordinates(e({4, 2}), seg);
  REQUIRE(l);
  CHECK(*l == std::vector<Rational>{q(2, 3), q(1, 3)});
  CHECK_FALSE(barycentric_coordinates(e({6, 0}), seg));  // on the boundary
  CHECK_FALSE(barycentric_coordinates(e({3, 2}), seg));  // off the affine hull
  CHECK_THROWS_AS(barycentric_coordinates(e({2, 2}), {e({4, 0}), e({2, 2}), e({0, 4})}), AffinelyDependentInput);
}

TEST_CASE("candidate cap") {
  GeometryOptions tight;
  tight.max_candidates = 2;
  CHECK_THROWS_AS(support_partition(robinson1_form(), tight), CapExceeded);
  CHECK_THROWS_AS(support_partition(SparseForm::zero(3, 6)), ZeroFormInput);
}

TEST_CASE("hull vertices agree with the Caratheodory oracle") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(0, 4);
  for (int round = 0; round < 40; ++round) {
    const int n = 2 + round % 2;
    ExponentSet pts;
    for (int k = 0; k < 7; ++k) {
      Exponent p(n);
      for (int i = 0; i < n; ++i) p[i] = coord(rng);
      pts.insert(p);
    }
    INFO("round " << round);
    CHECK(hull_vertices(pts) == oracle::hull_vertices(pts));
  }
}

TEST_CASE("lattice points agree with a box-scan oracle") {
  std::mt19937 rng(9);
  for (int round = 0; round < 25; ++round) {
    const int n = 2 + round % 3;
    const auto simplex = random_even_simplex(rng, n, n, 2 + round % 2);
    const ExponentSet as_set(simplex.begin(), simplex.end());
    INFO("round " << round);
    CHECK(lattice_points(simplex) == oracle::box_lattice_points(as_set));
    CHECK(hull_lattice_points(as_set) == oracle::box_lattice_points(as_set));
    CHECK(hull_lattice_points(as_set, 2) == oracle::box_lattice_points(as_set, 2));
  }
}

TEST_CASE("half Newton polytope") {
  const auto support = half_newton_support(separator_ternary_form());
  CHECK(support == set_of({e({2, 1, 0}), e({1, 2, 0}), e({1, 1, 1}), e({0, 0, 3})}));
  CHECK(half_newton_vertices(motzkin_form()) == set_of({e({2, 1, 0}), e({1, 2, 0}), e({0, 0, 3})}));
  CHECK_THROWS_AS(half_newton_support(parse_form("x1^3")), OddDegree);
  CHECK_THROWS_AS(half_newton_vertices(parse_form("x1^3*x2 + x1*x2^3")), OddDegree);
}

TEST_CASE("vertex precheck") {
  CHECK(psd_newton_precheck(motzkin_form()).pass);
  const auto bad = psd_newton_precheck(parse_form("x1^2*x2^2 - x1^3*x2 + x2^4"));
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == e({3, 1}));
  // A vertex with a negative coefficient is not a monomial square either.
  CHECK_FALSE(psd_newton_precheck(parse_form("x1^2 - x2^2")).pass);
}
