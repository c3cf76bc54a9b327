#pragma once

#include "newtonkit/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace newtonkit {

/// Isocrystal slopes 1 >= lambda_1 > ... > lambda_r >= 0 with positive integer
/// multiplicities. Heights are the partial sums of the multiplicities.
class SlopeProfile {
 public:
  /// Validates the ordering, range and multiplicities. If polarized is set the
  /// profile must satisfy lambda_i + lambda_{r+1-i} = 1 with matching
  /// multiplicities.
  SlopeProfile(std::vector<Rational> slopes, std::vector<std::int64_t> mults, bool polarized = false);

  /// Sorts, merges equal slopes and drops zero multiplicities before validating.
  static SlopeProfile normalized(std::vector<std::pair<Rational, std::int64_t>> parts, bool polarized);

  const std::vector<Rational>& slopes() const { return slopes_; }
  const std::vector<std::int64_t>& mults() const { return mults_; }
  bool polarized() const { return polarized_; }
  /// Whether the symmetry lambda_i + lambda_{r+1-i} = 1 holds, flag or not.
  bool is_self_dual() const;

  std::size_t size() const { return slopes_.size(); }
  /// h_1, ..., h_r.
  std::vector<std::int64_t> heights() const;
  std::int64_t total_height() const;

  friend bool operator==(const SlopeProfile&, const SlopeProfile&) = default;

 private:
  std::vector<Rational> slopes_;
  std::vector<std::int64_t> mults_;
  bool polarized_ = false;
};

struct DegreeData {
  SlopeProfile profile;
  /// d_i = sum_{k<=i} (h_k - h_{k-1}) lambda_k.
  std::vector<Rational> d;
  /// One quarter of the smallest gap between consecutive slopes; absent for r = 1.
  std::optional<Rational> delta;
};

/// Slopes of a Newton cocharacter. With n = embedding_dim / 2 symplectic
/// coordinates x_j the slopes are 1/2 + x_j and 1/2 - x_j; a full vector of
/// embedding_dim coordinates is taken as the slope list itself.
SlopeProfile profile_from_newton(const RatVec& nu, std::size_t embedding_dim);

DegreeData degrees(const SlopeProfile& profile);

/// Value at height h of the concave Newton polygon: d_k + (h - h_k) lambda_{k+1}
/// for h_k <= h <= h_{k+1}.
Rational max_degree_bound(const SlopeProfile& profile, std::int64_t h);

struct UniquenessCheck {
  bool holds = true;
  /// Smallest h that violates the bound, when holds is false.
  std::optional<std::int64_t> violating_height;
};

/// Checks that two distinct subgroups of height h_i and degree > d_i - delta
/// cannot coexist: for every integer 0 <= h < h_i with 2 h_i - h <= total
/// height, F(h) + F(2 h_i - h) <= 2 (d_i - delta) where F is max_degree_bound.
/// i is 0-based. Vacuously true when r = 1.
UniquenessCheck check_uniqueness(const DegreeData& dd, std::size_t i);

/// Where a next-to-maximal profile came from.
struct SplitProvenance {
  SlopeProfile original;
  /// 0-based index of the first slope of the split pair.
  std::size_t i0;
  std::int64_t dh;
};

struct SplitProfile {
  SlopeProfile profile;
  std::optional<SplitProvenance> provenance;
};

/// Inserts lambda'_i = (lambda_i + lambda_{i+1}) / 2 and its dual
/// lambda'_{r-i} with multiplicity 2 dh each, taking dh off each neighbour.
/// i is 0-based with 0 <= i < r - 1; a self-dual pair gives a single insertion.
SplitProfile next_to_max_profile(const SlopeProfile& profile, std::size_t i, std::int64_t dh);

struct ModifiedDegree {
  std::int64_t height;
  Rational value;
  /// "s_k" or "s'_k" (1-based k, as in the canonical-subgroup bookkeeping).
  std::string label;
};

/// The s-values of a next-to-maximal profile, computed from the unsplit degrees
/// d_k: s_k = d_k away from the split, s_{i0} = d_{i0} - dh lambda_{i0},
/// s'_{i0} = d_{i0} + dh lambda_{i0+1}, and the same pair at the dual index.
/// Sorted by height, one entry per height. Throws DomainError without
/// provenance.
std::vector<ModifiedDegree> modified_degrees(const SplitProfile& split);

}  // namespace newtonkit
