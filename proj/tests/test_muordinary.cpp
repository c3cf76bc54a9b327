#include "newtonkit/muordinary.hpp"

#include <doctest.h>

using namespace newtonkit;

namespace {

RatVec q(std::initializer_list<const char*> xs) {
  RatVec v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

}  // namespace

TEST_CASE("profile validation") {
  CHECK_NOTHROW(SlopeProfile(q({"1", "1/2", "0"}), {1, 2, 1}, true));
  CHECK_THROWS_AS(SlopeProfile(q({"1/2", "1"}), {1, 1}), DomainError);
  CHECK_THROWS_AS(SlopeProfile(q({"3/2"}), {1}), DomainError);
  CHECK_THROWS_AS(SlopeProfile(q({"1", "0"}), {1, 0}), DomainError);
  CHECK_THROWS_AS(SlopeProfile(q({"1", "0"}), {1}), DomainError);
  CHECK_THROWS_AS(SlopeProfile(q({"1", "1/3"}), {1, 1}, true), DomainError);
  CHECK_THROWS_AS(SlopeProfile(q({"1", "0"}), {2, 1}, true), DomainError);
  CHECK(SlopeProfile(q({"1", "0"}), {2, 2}).is_self_dual());
}

TEST_CASE("normalized merges and sorts") {
  SlopeProfile p = SlopeProfile::normalized({{Rational(0), 1}, {Rational(1), 1}, {Rational(0), 2}, {Rational(1, 2), 0}},
                                            false);
  CHECK(p.slopes() == q({"1", "0"}));
  CHECK(p.mults() == std::vector<std::int64_t>{1, 3});
}

TEST_CASE("degrees of (1, 1/2, 0) with multiplicities (1, 2, 1)") {
  SlopeProfile p(q({"1", "1/2", "0"}), {1, 2, 1}, true);
  CHECK(p.heights() == std::vector<std::int64_t>{1, 3, 4});
  DegreeData dd = degrees(p);
  CHECK(dd.d == q({"1", "2", "2"}));
  REQUIRE(dd.delta);
  CHECK(*dd.delta == Rational(1, 8));
  CHECK(max_degree_bound(p, 2) == Rational(3, 2));
  CHECK(max_degree_bound(p, 0) == 0);
  CHECK(max_degree_bound(p, 4) == 2);
  CHECK_THROWS_AS(max_degree_bound(p, 5), DomainError);
}

TEST_CASE("a single slope has no delta") {
  DegreeData dd = degrees(SlopeProfile(q({"1/2"}), {4}, true));
  CHECK_FALSE(dd.delta);
  CHECK(check_uniqueness(dd, 0).holds);
}

TEST_CASE("uniqueness at every canonical step") {
  SlopeProfile p(q({"1", "2/3", "1/3", "0"}), {2, 3, 3, 2}, true);
  DegreeData dd = degrees(p);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(check_uniqueness(dd, i).holds);
  CHECK_THROWS_AS(check_uniqueness(dd, 4), DomainError);
}

TEST_CASE("profile from a Newton cocharacter") {
  SlopeProfile p = profile_from_newton(q({"1/2", "0"}), 4);
  CHECK(p.slopes() == q({"1", "1/2", "0"}));
  CHECK(p.mults() == std::vector<std::int64_t>{1, 2, 1});
  CHECK(p.polarized());
  CHECK_THROWS_AS(profile_from_newton(q({"1", "0"}), 4), DomainError);
  SlopeProfile full = profile_from_newton(q({"1", "1", "0", "0"}), 4);
  CHECK(full.slopes() == q({"1", "0"}));
}

TEST_CASE("next-to-maximal split of (1, 0) with multiplicities (2, 2)") {
  SlopeProfile p(q({"1", "0"}), {2, 2}, true);
  SplitProfile sp = next_to_max_profile(p, 0, 1);
  CHECK(sp.profile.slopes() == q({"1", "1/2", "0"}));
  CHECK(sp.profile.mults() == std::vector<std::int64_t>{1, 2, 1});
  REQUIRE(sp.provenance);
  CHECK(sp.provenance->original == p);
  auto s = modified_degrees(sp);
  REQUIRE(s.size() == 3);
  CHECK(s[0].height == 1);
  CHECK(s[0].value == 1);
  CHECK(s[1].height == 3);
  CHECK(s[1].value == 2);
  CHECK(s[2].height == 4);
  CHECK(s[2].value == 2);
  CHECK_THROWS_AS(next_to_max_profile(p, 0, 0), DomainError);
  CHECK_THROWS_AS(next_to_max_profile(p, 0, 3), DomainError);
  CHECK_THROWS_AS(next_to_max_profile(p, 1, 1), DomainError);
}

TEST_CASE("a zero split reproduces the unsplit degrees") {
  SlopeProfile p(q({"1", "1/2", "0"}), {1, 2, 1}, true);
  SplitProfile sp{p, SplitProvenance{p, 0, 0}};
  auto s = modified_degrees(sp);
  DegreeData dd = degrees(p);
  auto h = p.heights();
  for (std::size_t k = 0; k < h.size(); ++k) {
    bool found = false;
    for (const auto& m : s) {
      if (m.height == h[k]) {
        CHECK(m.value == dd.d[k]);
        found = true;
      }
    }
    CHECK(found);
  }
  CHECK_THROWS_AS(modified_degrees(SplitProfile{p, std::nullopt}), DomainError);
}

TEST_CASE("a split polygon lies below the original") {
  SlopeProfile p(q({"1", "3/4", "1/4", "0"}), {2, 4, 4, 2}, true);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    SplitProfile sp = next_to_max_profile(p, i, 1);
    CHECK(sp.profile.total_height() == p.total_height());
    for (std::int64_t h = 0; h <= p.total_height(); ++h) {
      CHECK(max_degree_bound(sp.profile, h) <= max_degree_bound(p, h));
    }
  }
}
