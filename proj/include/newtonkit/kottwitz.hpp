#pragma once

#include "newtonkit/rootdata.hpp"

#include <string>
#include <vector>

namespace newtonkit {

/// A Newton point in B(G, mu) together with its membership certificate:
/// mubar - nu = sum_i c_i alpha_i^vee and J = { i : <nu, alpha_i> = 0 }.
struct KottwitzElement {
  Cocharacter nu;
  RatVec c;
  std::vector<std::size_t> zero_pairings;
};

struct KottwitzSet {
  Cocharacter mu;
  Cocharacter mubar;
  /// Sorted lexicographically by nu.
  std::vector<KottwitzElement> elements;
};

struct Membership {
  bool member = false;
  RatVec c;
  std::vector<std::size_t> zero_pairings;
  /// Human-readable reason when member is false.
  std::string reason;
};

/// (1/r) sum_{i<r} sigma^i(mu), r the order of sigma.
Cocharacter galois_average(const RootDatum& d, const Cocharacter& mu);

/// Decides nu in B(G, mu) for the given Galois average mubar:
///   nu dominant; mubar - nu a non-negative combination of simple coroots (so the
///   central parts agree); and for every simple alpha with <nu, alpha> != 0,
///   <mubar - nu, w_alpha> is an integer. With nontrivial sigma the weight is
///   summed over the sigma-orbit of alpha and nu must be sigma-invariant
///   (experimental path).
Membership is_in_bgmu(const RootDatum& d, const Cocharacter& nu, const Cocharacter& mubar);

/// All of B(G, mu). For each zero-pairing set J (a union of sigma-orbits) the
/// coefficients outside J range over the admissible lattice inside the box
/// [0, coefficient of mubar], and those inside J are solved from <nu, alpha> = 0.
KottwitzSet enumerate_bgmu(const RootDatum& d, const Cocharacter& mu);

/// x <= y in the Newton order: y - x is a non-negative rational combination of
/// simple coroots (which forces equal central parts).
bool newton_leq(const RootDatum& d, const Cocharacter& x, const Cocharacter& y);

/// The maximal elements of ks, optionally after removing mubar. Returns the full
/// antichain. Throws DomainError if nothing is left to compare.
std::vector<KottwitzElement> maximal_elements(const RootDatum& d, const KottwitzSet& ks, bool exclude_top);

/// { w_{alpha^vee} : alpha special } together with 0 (listed first).
std::vector<Cocharacter> minuscule_coweights(const RootDatum& d);

}  // namespace newtonkit
