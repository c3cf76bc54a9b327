#pragma once

#include "newtonkit/hecke.hpp"
#include "newtonkit/muordinary.hpp"
#include "newtonkit/rootdata.hpp"

#include <cstdint>
#include <set>
#include <vector>

// Brute-force reference implementations. Nothing here calls the fast paths in
// kottwitz, muordinary or hecke; they only share the RootDatum coordinates.
namespace newtonkit::oracles {

constexpr std::size_t kWeylOrbitCap = 50000;

/// Closure of {v} under the simple reflections. Throws DomainError past kWeylOrbitCap.
std::vector<RatVec> weyl_orbit(const RootDatum& d, const RatVec& v);

/// Is x a convex combination of the Weyl orbit of y? Exact phase-one simplex
/// with Bland's rule. Rank at most 3.
bool convex_hull_membership(const RootDatum& d, const RatVec& x, const RatVec& y);

struct GridSpec {
  std::int64_t denominator_bound;
  Rational box_bound;
};

/// denominator_bound = rank * |det Cartan|; box_bound = largest absolute
/// coordinate over the Weyl orbit of mu.
GridSpec default_grid_spec(const RootDatum& d, const RatVec& mu);

/// Every grid point nu with coordinates in (1/D)Z, |nu_j| <= box, on the affine
/// space mu + span(roots), that is dominant, lies in the hull of W mu and meets
/// the integrality condition on the coroot coefficients of mu - nu (found by an
/// exact Gaussian solve). Split data of rank at most 3.
std::set<RatVec, LexLess> grid_enumerate_bgmu(const RootDatum& d, const RatVec& mu, const GridSpec& spec);

enum class UnipotentShape {
  gl2_upper,             // [[1,x],[0,1]]
  gl3_upper,             // upper unitriangular 3x3
  sp4_siegel_lower,      // [[I,0],[X,I]], X = [[a,b],[c,a]]
};

/// Matrix entries (row, col), 0-based, that carry the free parameters.
std::vector<TorusRoot> shape_roots(UnipotentShape shape);
std::size_t shape_size(UnipotentShape shape);

/// [U(Z/p^k) : eps U(Z/p^k) eps^-1 cap U(Z/p^k)] by listing U and walking the
/// right cosets. Needs integral valuations, matrix size <= 4, p^k <= 625 and
/// every <eps, alpha> in [0, k).
std::int64_t coset_count_bruteforce(const HeckeValuation& eps, UnipotentShape shape, std::int64_t p, int k);

/// F(h) = sum of the h largest slopes, counted with multiplicity.
Rational brute_max_degree(const SlopeProfile& profile, std::int64_t h);

/// Degrees at the canonical heights and one quarter of the smallest pairwise
/// slope gap, from the expanded slope list.
struct FoldDegrees {
  std::vector<std::int64_t> heights;
  std::vector<Rational> d;
  std::optional<Rational> delta;
};
FoldDegrees fold_degrees(const SlopeProfile& profile);

/// F_a(h) <= F_b(h) for every integer h. Throws if total heights or total
/// degrees differ.
bool polygon_leq(const SlopeProfile& a, const SlopeProfile& b);

/// Uniqueness margin recomputed from brute_max_degree and fold_degrees; i 0-based.
bool uniqueness_bruteforce(const SlopeProfile& profile, std::size_t i);

/// Exponent of the multiplicative group of GF(q), q = p^w <= 243, built from a
/// brute-force irreducible polynomial.
std::int64_t field_unit_exponent(std::int64_t p, int w);

}  // namespace newtonkit::oracles
