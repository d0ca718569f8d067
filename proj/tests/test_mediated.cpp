#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sonckit/corpus.hpp"
#include "sonckit/mediated.hpp"

using namespace sonckit;

namespace {

Exponent e(std::initializer_list<int> v) { return make_exponent(v); }

ExponentSet outer_set(const SparseForm& f) {
  const auto c = as_circuit(f);
  REQUIRE(c);
  const auto outer = c->outer_exponents();
  return ExponentSet(outer.begin(), outer.end());
}

}  // namespace

TEST_CASE("midpoints and the mediated predicate") {
  const ExponentSet tri = parse_point_list("0,0; 2,0; 0,2");
  CHECK(mid_set(tri) == parse_point_list("1,0; 0,1; 1,1"));
  CHECK(mid_set(parse_point_list("1,1; 3,1")).empty());  // odd points are never endpoints
  CHECK(is_mediated(tri, tri));
  CHECK(is_mediated(tri, parse_point_list("0,0; 2,0; 0,2; 1,0; 0,1; 1,1")));
  CHECK_FALSE(is_mediated(tri, parse_point_list("0,0; 2,0; 1,1")));  // misses (0,2)
  CHECK_FALSE(is_mediated(tri, parse_point_list("0,0; 2,0; 0,2; 3,3")));
}

TEST_CASE("Motzkin vertex set is an M-simplex") {
  const auto m = maximal_mediated_set(outer_set(motzkin_form()));
  CHECK(m.classification == SimplexClass::MSimplex);
  CHECK(m.star.size() == 6);
  CHECK(m.star.count(e({2, 2, 2})) == 0);
  CHECK(m.lattice.count(e({2, 2, 2})) == 1);
  CHECK(is_mediated(m.delta, m.star));
  CHECK(m.star == oracle::mms_exhaustive(m.delta, m.lattice));

  const auto c = *as_circuit(motzkin_form());
  CHECK_FALSE(circuit_is_sos(c, m));
}

TEST_CASE("standard triangle is an H-simplex") {
  const auto m = maximal_mediated_set(parse_point_list("0,0; 2,0; 0,2"));
  CHECK(m.classification == SimplexClass::HSimplex);
  CHECK(m.star == m.lattice);
  CHECK(m.star.size() == 6);
}

TEST_CASE("Choi-Lam inner points lie outside their stars") {
  const auto q1 = maximal_mediated_set(outer_set(choi_lam_q1_form()));
  CHECK(q1.star.count(e({1, 1, 1, 1})) == 0);
  const auto q2 = maximal_mediated_set(outer_set(choi_lam_q2_form()));
  CHECK(q2.star.count(e({2, 2, 2})) == 0);
  CHECK(q2.star == oracle::mms_rounds(q2.delta, q2.lattice));
}

TEST_CASE("SOS decision for circuits") {
  const auto square = *as_circuit(parse_form("x1^4 + x2^4 - 2*x1^2*x2^2"));
  CHECK(circuit_is_sos(square, maximal_mediated_set(parse_point_list("4,0; 0,4"))));
  const auto disguised = *as_circuit(parse_form("x1^4*x2^2 + x1^2*x2^4 + 5*x1^2*x2^2*x3^2 + x3^6"));
  CHECK(circuit_is_sos(disguised, maximal_mediated_set(outer_set(motzkin_form()))));
  const auto sums = *as_circuit(parse_form("x1^4 + x2^4"));
  CHECK(circuit_is_sos(sums, maximal_mediated_set(parse_point_list("4,0; 0,4"))));

  const auto negative = *as_circuit(parse_form("x1^4*x2^2 + x1^2*x2^4 - 4*x1^2*x2^2*x3^2 + x3^6"));
  CHECK_THROWS_AS(circuit_is_sos(negative, maximal_mediated_set(outer_set(motzkin_form()))), NotNonnegativeCircuit);
  CHECK_THROWS_AS(circuit_is_sos(*as_circuit(motzkin_form()), maximal_mediated_set(parse_point_list("0,0,6; 6,0,0"))),
                  DimensionMismatch);
}

TEST_CASE("non-simplicial and invalid inputs") {
  const auto collinear = maximal_mediated_set(parse_point_list("4,0; 2,2; 0,4"));
  CHECK(collinear.classification == SimplexClass::NotSimplicial);
  CHECK(is_mediated(collinear.delta, collinear.star));
  CHECK_THROWS_AS(maximal_mediated_set(parse_point_list("1,1; 2,0")), OddPointInDelta);
  CHECK_THROWS_AS(parse_point_list("1,2; 3"), DimensionMismatch);
  CHECK_THROWS_AS(parse_point_list("1,a"), ParseError);
  CHECK_THROWS_AS(parse_point_list("1,-2"), ParseError);
  CHECK_THROWS_AS(parse_point_list("  "), ParseError);
  CHECK(parse_point_list("1,2;;3,4;").size() == 2);  // empty items are skipped
  CHECK_THROWS_AS(parse_point_list("1,,2"), ParseError);
}

TEST_CASE("deletion order does not change the fixpoint") {
  const ExponentSet delta = parse_point_list("6,0,0; 0,4,2; 0,0,6");
  const auto base = maximal_mediated_set(delta);
  for (unsigned seed = 1; seed <= 8; ++seed) {
    MediatedOptions options;
    options.shuffle_seed = seed;
    CHECK(maximal_mediated_set(delta, options).star == base.star);
  }
  CHECK(base.star == oracle::mms_rounds(delta, base.lattice));
}
