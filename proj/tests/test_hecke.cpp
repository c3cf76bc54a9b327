#include "newtonkit/hecke.hpp"
#include "newtonkit/muordinary.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace newtonkit;

namespace {

RatVec q(std::initializer_list<const char*> xs) {
  RatVec v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

FiltrationSteps steps_of(const SlopeProfile& p) {
  DegreeData dd = degrees(p);
  auto h = p.heights();
  FiltrationSteps steps;
  for (std::size_t i = 0; i + 1 < h.size(); ++i) steps.emplace_back(h[i], dd.d[i]);
  return steps;
}

}  // namespace

TEST_CASE("valuation vectors") {
  HeckeValuation e = HeckeValuation::from_torus(q({"0", "1"}), Rational(1), 3);
  CHECK(e.full() == q({"0", "1", "0", "1"}));
  CHECK(e.t() == q({"0", "1"}));
  CHECK(e.symplectic_shape());
  CHECK(e.in_positive_monoid());
  CHECK(e.integral());
  CHECK_FALSE(HeckeValuation::from_torus(q({"1", "0"}), Rational(1), 3).in_positive_monoid());
  CHECK_FALSE(HeckeValuation::from_full(q({"1", "0", "0"}), Rational(1), 3).symplectic_shape());
  CHECK(HeckeValuation::filtration_element(2, 4, 3).full() == q({"1", "1", "0", "0"}));
  CHECK_THROWS_AS(HeckeValuation::from_torus(q({"0"}), Rational(1), 4), DomainError);
  CHECK_THROWS_AS(HeckeValuation::from_torus(q({"0"}), Rational(1), 2), DomainError);
  CHECK_THROWS_AS(HeckeValuation::from_full({}, Rational(1), 3), DomainError);
}

TEST_CASE("root lists") {
  CHECK(gl_roots(3).size() == 6);
  CHECK(symplectic_roots(2).size() == 8);
  CHECK(symplectic_roots(3).size() == 18);
  auto siegel = parabolic_roots(q({"0", "0", "1", "1"}), symplectic_roots(2));
  std::sort(siegel.begin(), siegel.end());
  CHECK(siegel == std::vector<TorusRoot>{{2, 0}, {2, 1}, {3, 0}});
  auto borel = parabolic_roots(q({"2", "1", "0"}), gl_roots(3));
  CHECK(borel.size() == 3);
}

TEST_CASE("m_epsilon on small examples") {
  auto u = parabolic_roots(q({"1", "0"}), gl_roots(2));
  HeckeValuation e = HeckeValuation::from_full(q({"1", "0"}), Rational(0), 3);
  CHECK(m_epsilon_valuation(e, u) == 1);
  CHECK(materialize(3, m_epsilon_valuation(e, u)) == 3);

  auto siegel = parabolic_roots(q({"0", "0", "1", "1"}), symplectic_roots(2));
  HeckeValuation c2 = HeckeValuation::from_full(q({"0", "0", "1", "1"}), Rational(1), 3);
  CHECK(m_epsilon_valuation(c2, siegel) == 3);
  CHECK(x_epsilon_valuation(c2, siegel) == 3);

  HeckeValuation id = HeckeValuation::from_full(zeros(4), Rational(0), 3);
  CHECK(m_epsilon_valuation(id, siegel) == 0);
  CHECK(materialize(5, Rational(0)) == 1);

  HeckeValuation bad = HeckeValuation::from_full(q({"0", "1"}), Rational(0), 3);
  CHECK_THROWS_AS(m_epsilon_valuation(bad, u), DomainError);
  CHECK_THROWS_AS(materialize(3, Rational(1, 2)), DomainError);
}

TEST_CASE("multiplicativity") {
  auto u = parabolic_roots(q({"0", "0", "0", "1", "1", "1"}), symplectic_roots(3));
  HeckeValuation a = HeckeValuation::from_torus(q({"0", "1", "1"}), Rational(3), 5);
  HeckeValuation b = HeckeValuation::from_torus(q({"1", "1", "2"}), Rational(5), 5);
  CHECK(x_epsilon_valuation(a * b, u) == x_epsilon_valuation(a, u) + x_epsilon_valuation(b, u));
  CHECK(lambda_g_valuation(a * b) == lambda_g_valuation(a) + lambda_g_valuation(b));
  CHECK_THROWS_AS(a * HeckeValuation::from_torus(q({"0", "1", "1"}), Rational(3), 3), DomainError);
}

TEST_CASE("lambda_G") {
  CHECK(lambda_g_valuation(HeckeValuation::from_full(zeros(4), Rational(0), 3)) == 0);
  CHECK(lambda_g_valuation(HeckeValuation::from_torus(q({"1", "1"}), Rational(7), 3)) == 2);
  CHECK(lambda_g_valuation(HeckeValuation::from_torus(q({"0", "1"}), Rational(1), 3)) == 1);
}

TEST_CASE("perturbed filtration elements") {
  HeckeValuation base = HeckeValuation::filtration_element(2, 4, 3);
  CHECK(epsilon_prime_valuations(2, Rational(1), base) == base);
  HeckeValuation e = epsilon_prime_valuations(2, Rational(3, 2), base);
  CHECK(e.full() == q({"3/2", "1", "-1/2", "0"}));
  Rational before = 0, after = 0;
  for (const auto& x : base.full()) before += x;
  for (const auto& x : e.full()) after += x;
  CHECK(before == after);
  CHECK_THROWS_AS(epsilon_prime_valuations(2, Rational(0), base), DomainError);
  CHECK_THROWS_AS(epsilon_prime_valuations(2, Rational(3), base), DomainError);
  CHECK_THROWS_AS(epsilon_prime_valuations(1, Rational(1), base), DomainError);
}

TEST_CASE("n_G and C") {
  FiltrationSteps elliptic{{1, Rational(1)}};
  CHECK(n_g_constant(elliptic, 2, 3) == 1);

  SlopeProfile c2(q({"1", "0"}), {2, 2}, true);
  FiltrationSteps s = steps_of(c2);
  CHECK(n_g_constant(s, 4, 3) > 0);
  auto upper = parabolic_roots(q({"1", "1", "0", "0"}), symplectic_roots(2));
  CHECK(c_constant(s, 4, upper, 3) > 0);

  CHECK_THROWS_AS(n_g_constant({}, 4, 3), DomainError);
  FiltrationSteps single = steps_of(SlopeProfile(q({"1/2"}), {4}, true));
  CHECK(single.empty());
  CHECK_THROWS_AS(n_g_constant(single, 4, 3), DomainError);
}

TEST_CASE("n_G is positive on polarized profiles up to n = 5") {
  std::vector<Rational> upper{Rational(1), Rational(4, 5), Rational(3, 4), Rational(2, 3), Rational(3, 5)};
  int count = 0;
  // Choose a decreasing set of upper slopes with multiplicities, mirror it, and
  // optionally add slope 1/2 in the middle.
  std::function<void(std::size_t, std::vector<std::pair<Rational, std::int64_t>>, std::int64_t)> rec =
      [&](std::size_t start, std::vector<std::pair<Rational, std::int64_t>> parts, std::int64_t used) {
        for (std::int64_t mid = 0; mid <= 2 * 5 - 2 * used; mid += 2) {
          if (parts.empty() && mid == 0) continue;
          std::vector<std::pair<Rational, std::int64_t>> all = parts;
          for (const auto& [l, m] : parts) all.emplace_back(1 - l, m);
          if (mid > 0) all.emplace_back(Rational(1, 2), mid);
          SlopeProfile p = SlopeProfile::normalized(all, true);
          if (p.size() < 2) continue;
          CAPTURE(p.total_height());
          CHECK(n_g_constant(steps_of(p), static_cast<std::size_t>(p.total_height()), 3) > 0);
          ++count;
        }
        for (std::size_t k = start; k < upper.size(); ++k) {
          auto den = upper[k].get_den().get_si();
          for (std::int64_t m = den; used + m <= 5; m += den) {
            auto next = parts;
            next.emplace_back(upper[k], m);
            rec(k + 1, next, used + m);
          }
        }
      };
  rec(0, {}, 0);
  CHECK(count > 20);
}

TEST_CASE("hasse numbers") {
  CHECK(hasse_number(1, 3) == 2);
  CHECK(hasse_number(2, 3) == 8);
  CHECK(hasse_number(3, 5) == 124);
  CHECK_THROWS_AS(hasse_number(0, 3), DomainError);
  CHECK_THROWS_AS(hasse_number(1, 2), DomainError);
  CHECK_THROWS_AS(hasse_number(1, 9), DomainError);
  CHECK_THROWS_AS(hasse_number(200, 3), DomainError);
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(1));
}
