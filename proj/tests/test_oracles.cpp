#include "oracles.hpp"

#include "newtonkit/kottwitz.hpp"

#include <doctest.h>

using namespace newtonkit;
using namespace newtonkit::oracles;

namespace {

RatVec q(std::initializer_list<const char*> xs) {
  RatVec v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

}  // namespace

TEST_CASE("Weyl orbit sizes") {
  CHECK(weyl_orbit(build_datum("C", 2), q({"1/2", "1/2"})).size() == 4);
  CHECK(weyl_orbit(build_datum("C", 2), q({"1", "1/2"})).size() == 8);
  CHECK(weyl_orbit(build_datum("A", 3), q({"1", "0", "0", "0"})).size() == 4);
  CHECK(weyl_orbit(build_datum("E", 6), build_datum("E", 6).fundamental_coweights()[0]).size() == 27);
  CHECK(weyl_orbit(build_datum("B", 2), zeros(2)).size() == 1);
}

TEST_CASE("hull membership") {
  RootDatum c2 = build_datum("C", 2);
  CHECK(convex_hull_membership(c2, q({"1/2", "0"}), q({"1/2", "1/2"})));
  CHECK(convex_hull_membership(c2, q({"0", "0"}), q({"1/2", "1/2"})));
  CHECK_FALSE(convex_hull_membership(c2, q({"1", "0"}), q({"1/2", "1/2"})));
  RootDatum a2 = build_datum("A", 2);
  CHECK_FALSE(convex_hull_membership(a2, q({"1", "1", "1"}), q({"1", "0", "-1"})));
  CHECK_THROWS_AS(convex_hull_membership(build_datum("A", 4), zeros(5), zeros(5)), DomainError);
}

TEST_CASE("grid enumeration agrees with C2 and A2 by hand") {
  RootDatum c2 = build_datum("C", 2);
  RatVec mu = c2.fundamental_coweights()[1];
  auto grid = grid_enumerate_bgmu(c2, mu, default_grid_spec(c2, mu));
  CHECK(grid.size() == 3);
  CHECK(grid.count(q({"1/2", "0"})) == 1);
  RootDatum a2 = build_datum("A", 2);
  RatVec w = a2.fundamental_coweights()[0];
  auto ga = grid_enumerate_bgmu(a2, w, default_grid_spec(a2, w));
  // mu, the basic point 0 and slopes (1/2, 1/2, 0) shifted to trace zero.
  CHECK(ga.size() == 3);
  CHECK(ga.count(zeros(3)) == 1);
  CHECK(ga.count(q({"1/6", "1/6", "-1/3"})) == 1);
  CHECK(default_grid_spec(c2, mu).denominator_bound == 4);
}

TEST_CASE("grid enumeration matches the fast path on B3") {
  RootDatum b3 = build_datum("B", 3);
  RatVec mu = add(b3.fundamental_coweights()[0], b3.fundamental_coweights()[0]);
  auto grid = grid_enumerate_bgmu(b3, mu, default_grid_spec(b3, mu));
  KottwitzSet ks = enumerate_bgmu(b3, mu);
  REQUIRE(grid.size() == ks.elements.size());
  std::size_t k = 0;
  for (const auto& nu : grid) CHECK(nu == ks.elements[k++].nu);
}

TEST_CASE("unipotent coset counts") {
  auto gl2 = HeckeValuation::from_full(q({"1", "0"}), Rational(0), 3);
  CHECK(coset_count_bruteforce(gl2, UnipotentShape::gl2_upper, 3, 2) == 3);
  auto siegel = HeckeValuation::from_full(q({"0", "0", "1", "1"}), Rational(1), 3);
  CHECK(coset_count_bruteforce(siegel, UnipotentShape::sp4_siegel_lower, 3, 2) == 27);
  auto id = HeckeValuation::from_full(zeros(3), Rational(0), 5);
  CHECK(coset_count_bruteforce(id, UnipotentShape::gl3_upper, 5, 1) == 1);
  auto gl3 = HeckeValuation::from_full(q({"2", "1", "0"}), Rational(0), 3);
  CHECK(coset_count_bruteforce(gl3, UnipotentShape::gl3_upper, 3, 3) == 81);
  CHECK(shape_roots(UnipotentShape::gl3_upper).size() == 3);
  CHECK(shape_size(UnipotentShape::sp4_siegel_lower) == 4);
  CHECK_THROWS_AS(coset_count_bruteforce(gl2, UnipotentShape::gl2_upper, 5, 5), DomainError);
}

TEST_CASE("slope brute force") {
  SlopeProfile p({Rational(1), Rational(1, 2), Rational(0)}, {1, 2, 1}, true);
  CHECK(brute_max_degree(p, 2) == Rational(3, 2));
  FoldDegrees f = fold_degrees(p);
  CHECK(f.heights == std::vector<std::int64_t>{1, 3, 4});
  CHECK(f.d == q({"1", "2", "2"}));
  REQUIRE(f.delta);
  CHECK(*f.delta == Rational(1, 8));
  for (std::size_t i = 0; i < 3; ++i) CHECK(uniqueness_bruteforce(p, i));
}

TEST_CASE("polygon order") {
  SlopeProfile top({Rational(1), Rational(0)}, {2, 2}, true);
  SlopeProfile mid({Rational(1), Rational(1, 2), Rational(0)}, {1, 2, 1}, true);
  SlopeProfile ss({Rational(1, 2)}, {4}, true);
  CHECK(polygon_leq(mid, top));
  CHECK(polygon_leq(ss, mid));
  CHECK_FALSE(polygon_leq(top, mid));
  CHECK(polygon_leq(top, top));
  CHECK_THROWS_AS(polygon_leq(top, SlopeProfile({Rational(1, 2)}, {2}, true)), DomainError);
  CHECK_THROWS_AS(polygon_leq(top, SlopeProfile({Rational(1)}, {4})), DomainError);
}

TEST_CASE("unit group exponents") {
  CHECK(field_unit_exponent(3, 1) == 2);
  CHECK(field_unit_exponent(3, 2) == 8);
  CHECK(field_unit_exponent(5, 3) == 124);
  CHECK(field_unit_exponent(3, 5) == 242);
  CHECK_THROWS_AS(field_unit_exponent(3, 6), DomainError);
}
