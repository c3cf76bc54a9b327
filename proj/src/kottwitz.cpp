#include "newtonkit/kottwitz.hpp"

#include "newtonkit/linalg.hpp"

#include <map>

namespace newtonkit {

Cocharacter galois_average(const RootDatum& d, const Cocharacter& mu) {
  d.check_dim(mu);
  RatVec acc = zeros(d.ambient_dim());
  RatVec term = mu;
  for (int i = 0; i < d.sigma_order(); ++i) {
    acc = add(acc, term);
    term = d.apply_sigma(term);
  }
  return scale(Rational(1, d.sigma_order()), acc);
}

Membership is_in_bgmu(const RootDatum& d, const Cocharacter& nu, const Cocharacter& mubar) {
  d.check_dim(nu);
  d.check_dim(mubar);
  if (!d.split()) {
    if (d.apply_sigma(nu) != nu) throw DomainError("nu is not sigma-invariant");
    if (d.apply_sigma(mubar) != mubar) throw DomainError("mubar is not sigma-invariant");
  }

  Membership m;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    const Rational p = dot(nu, d.simple_roots()[i]);
    if (p < 0) {
      m.reason = "nu pairs negatively with simple root " + std::to_string(i + 1);
      return m;
    }
    if (p == 0) m.zero_pairings.push_back(i);
  }

  const RatVec delta = sub(mubar, nu);
  m.c = d.coroot_coefficients(delta);
  if (!is_zero(sub(delta, d.from_coroot_coefficients(m.c)))) {
    m.reason = "mubar - nu has a nonzero central component";
    return m;
  }
  for (std::size_t i = 0; i < m.c.size(); ++i) {
    if (m.c[i] < 0) {
      m.reason = "coroot coefficient " + std::to_string(i + 1) + " of mubar - nu is negative";
      return m;
    }
  }

  for (const auto& orbit : d.sigma_orbits()) {
    const Rational p = dot(nu, d.simple_roots()[orbit.front()]);
    if (p == 0) continue;
    Rational relative = 0;
    for (auto j : orbit) relative += m.c[j];
    if (!is_integer(relative)) {
      m.reason = "<mubar - nu, w> = " + to_string(relative) + " is not an integer at node " +
                 std::to_string(orbit.front() + 1);
      return m;
    }
  }
  m.member = true;
  return m;
}

namespace {

// Folded Cartan entry: sum over the orbit of the coroot pairings with alpha_i.
Rational orbit_pairing(const RootDatum& d, std::size_t i, const std::vector<std::size_t>& orbit) {
  Rational s = 0;
  for (auto j : orbit) s += d.cartan()[i][j];
  return s;
}

}  // namespace

KottwitzSet enumerate_bgmu(const RootDatum& d, const Cocharacter& mu) {
  d.check_dim(mu);
  if (!is_dominant(d, mu)) throw DomainError("mu is not dominant");

  KottwitzSet ks;
  ks.mu = mu;
  ks.mubar = galois_average(d, mu);

  const auto orbits = d.sigma_orbits();
  const std::size_t m = orbits.size();
  const RatVec cmax = d.coroot_coefficients(ks.mubar);

  std::vector<Rational> target(m);
  std::vector<mpz_class> steps_max(m);
  for (std::size_t o = 0; o < m; ++o) {
    const auto rep = orbits[o].front();
    target[o] = dot(ks.mubar, d.simple_roots()[rep]);
    steps_max[o] = floor(cmax[rep] * static_cast<long>(orbits[o].size()));
  }

  std::map<RatVec, KottwitzElement, LexLess> found;

  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::size_t> in_j;
    std::vector<std::size_t> free;
    for (std::size_t o = 0; o < m; ++o) ((mask >> o) & 1 ? in_j : free).push_back(o);

    RatMatrix block(in_j.size(), RatVec(in_j.size()));
    for (std::size_t r = 0; r < in_j.size(); ++r) {
      for (std::size_t s = 0; s < in_j.size(); ++s) {
        block[r][s] = orbit_pairing(d, orbits[in_j[r]].front(), orbits[in_j[s]]);
      }
    }
    const auto block_inv = linalg::inverse(block);
    if (!block_inv) throw DomainError("singular Cartan block while enumerating B(G, mu)");

    std::vector<mpz_class> counter(free.size(), 0);
    while (true) {
      std::vector<Rational> gamma(m, 0);
      for (std::size_t f = 0; f < free.size(); ++f) {
        gamma[free[f]] = Rational(counter[f]) / static_cast<long>(orbits[free[f]].size());
      }
      RatVec rhs(in_j.size());
      for (std::size_t r = 0; r < in_j.size(); ++r) {
        const auto rep = orbits[in_j[r]].front();
        rhs[r] = target[in_j[r]];
        for (auto f : free) rhs[r] -= orbit_pairing(d, rep, orbits[f]) * gamma[f];
      }
      const RatVec solved = linalg::multiply(*block_inv, rhs);
      bool admissible = true;
      for (std::size_t r = 0; r < in_j.size(); ++r) {
        if (solved[r] < 0) admissible = false;
        gamma[in_j[r]] = solved[r];
      }
      if (admissible) {
        RatVec c(d.rank());
        for (std::size_t o = 0; o < m; ++o) {
          for (auto j : orbits[o]) c[j] = gamma[o];
        }
        const RatVec nu = sub(ks.mubar, d.from_coroot_coefficients(c));
        if (!found.contains(nu)) {
          auto cert = is_in_bgmu(d, nu, ks.mubar);
          if (cert.member) found.emplace(nu, KottwitzElement{nu, std::move(cert.c), std::move(cert.zero_pairings)});
        }
      }

      std::size_t f = 0;
      while (f < free.size() && counter[f] == steps_max[free[f]]) counter[f++] = 0;
      if (f == free.size()) break;
      ++counter[f];
    }
  }

  for (auto& [nu, element] : found) ks.elements.push_back(std::move(element));
  return ks;
}

bool newton_leq(const RootDatum& d, const Cocharacter& x, const Cocharacter& y) {
  const RatVec delta = sub(y, x);
  const RatVec c = d.coroot_coefficients(delta);
  if (!is_zero(sub(delta, d.from_coroot_coefficients(c)))) return false;
  for (const auto& ci : c) {
    if (ci < 0) return false;
  }
  return true;
}

std::vector<KottwitzElement> maximal_elements(const RootDatum& d, const KottwitzSet& ks, bool exclude_top) {
  std::vector<const KottwitzElement*> candidates;
  for (const auto& e : ks.elements) {
    if (exclude_top && e.nu == ks.mubar) continue;
    candidates.push_back(&e);
  }
  if (candidates.empty()) throw DomainError("no elements left to compare");

  std::vector<KottwitzElement> maxima;
  for (const auto* x : candidates) {
    bool dominated = false;
    for (const auto* y : candidates) {
      if (x != y && x->nu != y->nu && newton_leq(d, x->nu, y->nu)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maxima.push_back(*x);
  }
  return maxima;
}

std::vector<Cocharacter> minuscule_coweights(const RootDatum& d) {
  std::vector<Cocharacter> out{zeros(d.ambient_dim())};
  for (auto i : special_roots(d)) out.push_back(d.fundamental_coweights()[i]);
  return out;
}

}  // namespace newtonkit
