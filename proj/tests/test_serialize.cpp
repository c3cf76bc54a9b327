#include "newtonkit/serialize.hpp"

#include <doctest.h>

using namespace newtonkit;

TEST_CASE("rationals round-trip as strings") {
  Json j = to_json(Rational(-3, 4));
  CHECK(j == "-3/4");
  CHECK(rational_from_json(j) == Rational(-3, 4));
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK_THROWS(rational_from_json(Json(0.5)));
  RatVec v{Rational(1, 2), Rational(0)};
  CHECK(ratvec_from_json(to_json(v)) == v);
}

TEST_CASE("root data round-trip") {
  RootDatum a3 = build_datum("A", 3, SigmaSpec::flip());
  Json j = to_json(a3);
  CHECK(j["sigma"] == Json::array({3, 2, 1}));
  RootDatum back = root_datum_from_json(j);
  CHECK(back.label() == "A3");
  CHECK(back.sigma() == a3.sigma());

  RootDatum prod = product({build_datum("A", 1), build_datum("G", 2)});
  RootDatum prod_back = root_datum_from_json(to_json(prod));
  CHECK(prod_back.label() == prod.label());
  CHECK(prod_back.simple_roots() == prod.simple_roots());
}

TEST_CASE("Kottwitz sets round-trip") {
  RootDatum c2 = build_datum("C", 2);
  KottwitzSet ks = enumerate_bgmu(c2, c2.fundamental_coweights()[1]);
  Json j = to_json(ks);
  CHECK(j["elements"].size() == 3);
  KottwitzSet back = kottwitz_set_from_json(j);
  CHECK(back.mubar == ks.mubar);
  REQUIRE(back.elements.size() == ks.elements.size());
  for (std::size_t i = 0; i < ks.elements.size(); ++i) {
    CHECK(back.elements[i].nu == ks.elements[i].nu);
    CHECK(back.elements[i].c == ks.elements[i].c);
    CHECK(back.elements[i].zero_pairings == ks.elements[i].zero_pairings);
  }
}

TEST_CASE("slope profiles round-trip") {
  SlopeProfile p({Rational(1), Rational(1, 2), Rational(0)}, {1, 2, 1}, true);
  CHECK(slope_profile_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(slope_profile_from_json(Json::parse(R"({"slopes":["1","0"],"mults":[2,1],"polarized":true})")),
                  DomainError);
}

TEST_CASE("Hecke valuations round-trip") {
  HeckeValuation e = HeckeValuation::from_torus({Rational(0), Rational(1, 2)}, Rational(1), 5);
  Json j = to_json(e);
  CHECK_FALSE(j.contains("full"));
  CHECK(hecke_valuation_from_json(j) == e);
  HeckeValuation f = HeckeValuation::from_full({Rational(2), Rational(0), Rational(1)}, Rational(1), 3);
  Json jf = to_json(f);
  CHECK(jf.contains("full"));
  CHECK(hecke_valuation_from_json(jf) == f);
}
