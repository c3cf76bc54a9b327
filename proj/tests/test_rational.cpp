#include "newtonkit/linalg.hpp"
#include "newtonkit/rational.hpp"

#include <doctest.h>

using namespace newtonkit;

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational(" 4/6 ") == Rational(2, 3));
  CHECK(to_string(parse_rational("4/-6")) == "-2/3");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("rational lists") {
  RatVec v = parse_rational_list("1/2,0,-1/4");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == Rational(-1, 4));
  CHECK(to_string(v) == "(1/2, 0/1, -1/4)");
  CHECK_THROWS_AS(parse_rational_list("1,,2"), DomainError);
}

TEST_CASE("floor and ceil") {
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(floor(Rational(7, 3)) == 2);
  CHECK(ceil(Rational(7, 3)) == 3);
  CHECK(floor(Rational(4)) == 4);
}

TEST_CASE("vector helpers") {
  RatVec a{Rational(1), Rational(1, 2)};
  RatVec b{Rational(2), Rational(-1)};
  CHECK(dot(a, b) == Rational(3, 2));
  CHECK(add(a, b) == RatVec{Rational(3), Rational(-1, 2)});
  CHECK(sub(a, b) == RatVec{Rational(-1), Rational(3, 2)});
  CHECK(scale(Rational(2), a) == RatVec{Rational(2), Rational(1)});
  CHECK(is_zero(zeros(3)));
  CHECK_THROWS_AS(dot(a, zeros(3)), DomainError);
  CHECK(lex_compare(a, b) < 0);
}

TEST_CASE("linear algebra") {
  RatMatrix m{{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}};
  CHECK(linalg::determinant(m) == 3);
  auto inv = linalg::inverse(m);
  REQUIRE(inv);
  CHECK((*inv)[0][0] == Rational(2, 3));
  CHECK((*inv)[0][1] == Rational(1, 3));
  auto x = linalg::solve(m, {Rational(1), Rational(0)});
  REQUIRE(x);
  CHECK(linalg::multiply(m, *x) == RatVec{Rational(1), Rational(0)});
  RatMatrix singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK_FALSE(linalg::inverse(singular));
  CHECK(linalg::rank(singular) == 1);
  CHECK(linalg::transpose(singular)[0][1] == 2);
}
