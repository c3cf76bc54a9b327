#include "newtonkit/rootdata.hpp"

#include <doctest.h>

using namespace newtonkit;

namespace {

RatVec q(std::initializer_list<const char*> xs) {
  RatVec v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

const char* kAllTypes[][2] = {{"A", "1"}, {"A", "4"}, {"B", "2"}, {"B", "4"}, {"C", "3"}, {"D", "4"},
                              {"D", "5"}, {"E", "6"}, {"E", "7"}, {"E", "8"}, {"F", "4"}, {"G", "2"}};

}  // namespace

TEST_CASE("cartan type parsing") {
  CHECK(parse_cartan_type("E6", std::nullopt).rank == 6);
  CHECK(parse_cartan_type("C", 3).family == Family::C);
  CHECK_THROWS_AS(parse_cartan_type("B", 1), DomainError);
  CHECK_THROWS_AS(parse_cartan_type("D", 2), DomainError);
  CHECK_THROWS_AS(parse_cartan_type("E", 5), DomainError);
  CHECK_THROWS_AS(parse_cartan_type("E6", 7), DomainError);
  CHECK_THROWS_AS(parse_cartan_type("X", 2), DomainError);
}

TEST_CASE("fundamental coweights of A3 and C2") {
  RootDatum a3 = build_datum("A", 3);
  CHECK(a3.fundamental_coweights()[0] == q({"3/4", "-1/4", "-1/4", "-1/4"}));
  CHECK(a3.fundamental_weights()[0] == q({"1", "0", "0", "0"}));
  RootDatum c2 = build_datum("C", 2);
  CHECK(c2.fundamental_coweights()[1] == q({"1/2", "1/2"}));
}

TEST_CASE("fundamental weight of B3 at the short node") {
  RootDatum b3 = build_datum("B", 3);
  CHECK(b3.fundamental_weights()[2] == q({"1/2", "1/2", "1/2"}));
}

TEST_CASE("pairing") {
  CHECK(pairing(q({"1/4", "1/4"}), q({"1", "1"})) == Rational(1, 2));
}

TEST_CASE("dominant representatives") {
  CHECK(dominant_representative(build_datum("C", 2), q({"0", "1/2"})) == q({"1/2", "0"}));
  CHECK(dominant_representative(build_datum("A", 2), q({"-1", "0", "1"})) == q({"1", "0", "-1"}));
  CHECK(is_dominant(build_datum("A", 2), q({"1", "0", "-1"})));
  CHECK_FALSE(is_dominant(build_datum("A", 2), q({"0", "1", "-1"})));
}

TEST_CASE("dual bases") {
  for (auto& [fam, rk] : kAllTypes) {
    CAPTURE(fam);
    CAPTURE(rk);
    RootDatum d = build_datum(fam, std::stoi(rk));
    for (std::size_t i = 0; i < d.rank(); ++i) {
      for (std::size_t j = 0; j < d.rank(); ++j) {
        Rational expect = i == j ? 1 : 0;
        CHECK(pairing(d.fundamental_coweights()[i], d.simple_roots()[j]) == expect);
        CHECK(pairing(d.simple_coroots()[j], d.fundamental_weights()[i]) == expect);
      }
    }
  }
}

TEST_CASE("cartan matrix convention") {
  RootDatum b2 = build_datum("B", 2);
  // alpha_1 long, alpha_2 short: <alpha_2^vee, alpha_1> = -2.
  CHECK(b2.cartan()[0][1] == -2);
  CHECK(b2.cartan()[1][0] == -1);
  CHECK(build_datum("G", 2).connection_index() == 1);
  CHECK(build_datum("A", 3).connection_index() == 4);
  CHECK(build_datum("E", 7).connection_index() == 2);
}

TEST_CASE("positive root counts") {
  CHECK(build_datum("A", 4).positive_roots().size() == 10);
  CHECK(build_datum("D", 5).positive_roots().size() == 20);
  CHECK(build_datum("E", 6).positive_roots().size() == 36);
  CHECK(build_datum("E", 7).positive_roots().size() == 63);
  CHECK(build_datum("E", 8).positive_roots().size() == 120);
  CHECK(build_datum("F", 4).positive_roots().size() == 24);
  CHECK(build_datum("G", 2).positive_roots().size() == 6);
}

TEST_CASE("highest roots and special nodes") {
  CHECK(highest_root(build_datum("E", 8)).coefficients == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(highest_root(build_datum("C", 3)).coefficients == std::vector<int>{2, 2, 1});
  CHECK(special_roots(build_datum("A", 3)) == std::vector<std::size_t>{0, 1, 2});
  CHECK(special_roots(build_datum("B", 3)) == std::vector<std::size_t>{0});
  CHECK(special_roots(build_datum("C", 3)) == std::vector<std::size_t>{2});
  CHECK(special_roots(build_datum("D", 5)) == std::vector<std::size_t>{0, 3, 4});
  CHECK(special_roots(build_datum("E", 6)) == std::vector<std::size_t>{0, 5});
  CHECK(special_roots(build_datum("E", 7)) == std::vector<std::size_t>{6});
  CHECK(special_roots(build_datum("E", 8)).empty());
  CHECK(special_roots(build_datum("G", 2)).empty());
  CHECK_THROWS_AS(highest_root(product({build_datum("A", 1), build_datum("A", 1)})), DomainError);
}

TEST_CASE("sigma") {
  RootDatum a3 = build_datum("A", 3, SigmaSpec::flip());
  CHECK(a3.sigma() == std::vector<std::size_t>{2, 1, 0});
  CHECK(a3.sigma_order() == 2);
  CHECK(a3.sigma_orbits().size() == 2);
  // sigma preserves the Cartan matrix and maps coroot coefficients accordingly.
  RatVec v = a3.fundamental_coweights()[0];
  CHECK(a3.apply_sigma(v) == a3.fundamental_coweights()[2]);
  CHECK(a3.apply_sigma(a3.apply_sigma(v)) == v);
  CHECK_THROWS_AS(build_datum("B", 3, SigmaSpec::flip()), DomainError);
  CHECK_THROWS_AS(build_datum("A", 3, SigmaSpec::permutation({2, 1, 3})), DomainError);
  RootDatum d4 = build_datum("D", 4, SigmaSpec::permutation({3, 2, 4, 1}));
  CHECK(d4.sigma_order() == 3);
}

TEST_CASE("coroot decomposition") {
  RootDatum a2 = build_datum("A", 2);
  RatVec v = q({"1", "1", "1"});
  CHECK(is_zero(a2.coroot_coefficients(v)));
  CHECK(a2.central_part(v) == v);
  CHECK_FALSE(a2.in_coroot_span(v));
  RatVec w = q({"1", "0", "-1"});
  CHECK(a2.coroot_coefficients(w) == q({"1", "1"}));
  CHECK(a2.from_coroot_coefficients(q({"1", "1"})) == w);
  CHECK(a2.reflect(0, q({"1", "0", "0"})) == q({"0", "1", "0"}));
}

TEST_CASE("products") {
  RootDatum d = product({build_datum("A", 1), build_datum("C", 2)});
  CHECK(d.label() == "A1xC2");
  CHECK(d.rank() == 3);
  CHECK(d.ambient_dim() == 4);
  CHECK(d.cartan()[0][1] == 0);
  CHECK(d.fundamental_coweights()[2] == q({"0", "0", "1/2", "1/2"}));
  CHECK_THROWS_AS(d.check_dim(q({"1"})), DomainError);
}
