#pragma once

#include "newtonkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace newtonkit {

/// A vector in the ambient rational cocharacter space of a RootDatum (home of
/// mu, its Galois average, Newton points and coroot shifts). Characters live in
/// the same coordinates; the pairing is the coordinate dot product.
using Cocharacter = RatVec;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family;
  int rank;

  std::string label() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Accepts "A".."G" with an explicit rank, or "E6", "F4", "G2" style labels
/// (rank optional but must agree). Throws DomainError for invalid ranks:
/// A n>=1, B/C n>=2, D n>=3, E 6/7/8, F 4, G 2.
CartanType parse_cartan_type(std::string_view label, std::optional<int> rank);

/// Diagram automorphism request for build_datum.
class SigmaSpec {
 public:
  enum class Kind { identity, flip, permutation };

  SigmaSpec() = default;
  static SigmaSpec identity() { return {}; }
  static SigmaSpec flip();
  /// 1-based permutation of the simple-root indices.
  static SigmaSpec permutation(std::vector<std::size_t> one_based);
  /// "identity", "flip", or a comma-separated 1-based permutation like "3,2,1".
  static SigmaSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& one_based() const { return perm_; }

 private:
  Kind kind_ = Kind::identity;
  std::vector<std::size_t> perm_;
};

/// Root system with exact coordinates in a fixed ambient space, plus a diagram
/// automorphism sigma. Immutable after construction.
///
/// Coordinates: A_n lives in Q^{n+1} with alpha_i = e_i - e_{i+1}; B_n, C_n, D_n in
/// Q^n with the usual e_i bases (D_n fork nodes are n-1: e_{n-1}-e_n and
/// n: e_{n-1}+e_n); E_6, E_7, E_8 are the first 6/7/8 Bourbaki roots of E_8
/// in Q^8; F_4 in Q^4 and G_2 in Q^3 use the Bourbaki bases. Coroots are
/// 2 alpha / (alpha, alpha). Node indices are 0-based in this API.
class RootDatum {
 public:
  struct Factor {
    CartanType type;
    std::size_t first_node;
    std::size_t first_coord;
    std::size_t ambient_dim;
  };

  const std::vector<Factor>& factors() const { return factors_; }
  bool indecomposable() const { return factors_.size() == 1; }
  /// "C2", or "A1xC2" for products.
  std::string label() const;

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return simple_roots_.size(); }

  const std::vector<RatVec>& simple_roots() const { return simple_roots_; }
  const std::vector<RatVec>& simple_coroots() const { return simple_coroots_; }
  /// a[i][j] = <alpha_j^vee, alpha_i>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// 0-based image of each node under sigma.
  const std::vector<std::size_t>& sigma() const { return sigma_; }
  int sigma_order() const { return sigma_order_; }
  bool split() const { return sigma_order_ == 1; }
  std::vector<std::vector<std::size_t>> sigma_orbits() const;

  /// Classical representatives: type A factors use sum_{j<=i} e_j, all other
  /// factors use the dual basis inside the root span.
  const std::vector<RatVec>& fundamental_weights() const { return weights_; }
  /// Dual basis to the simple roots inside the coroot span.
  const std::vector<RatVec>& fundamental_coweights() const { return coweights_; }

  const std::vector<RatVec>& positive_roots() const { return positive_roots_; }
  /// Simple-root coefficients of positive_roots()[k].
  const std::vector<std::vector<int>>& positive_root_coefficients() const { return positive_coeffs_; }

  /// c with v = sum c_i alpha_i^vee + v_perp and v_perp orthogonal to every root.
  RatVec coroot_coefficients(std::span<const Rational> v) const;
  /// The component v_perp of the decomposition above.
  RatVec central_part(std::span<const Rational> v) const;
  bool in_coroot_span(std::span<const Rational> v) const;
  RatVec from_coroot_coefficients(std::span<const Rational> c) const;

  /// Simple reflection s_i(v) = v - <v, alpha_i> alpha_i^vee.
  RatVec reflect(std::size_t i, std::span<const Rational> v) const;
  /// sigma permutes the simple coroots and fixes the central part.
  RatVec apply_sigma(std::span<const Rational> v) const;

  /// |det cartan|.
  long connection_index() const;

  void check_dim(std::span<const Rational> v) const;

 private:
  friend RootDatum build_datum(const CartanType&, const SigmaSpec&);
  friend RootDatum product(const std::vector<RootDatum>& parts);

  RootDatum() = default;
  void finish(std::vector<std::size_t> sigma);

  std::vector<Factor> factors_;
  std::size_t ambient_dim_ = 0;
  std::vector<RatVec> simple_roots_;
  std::vector<RatVec> simple_coroots_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::size_t> sigma_;
  int sigma_order_ = 1;
  std::vector<RatVec> weights_;
  std::vector<RatVec> span_weights_;
  std::vector<RatVec> coweights_;
  std::vector<RatVec> positive_roots_;
  std::vector<std::vector<int>> positive_coeffs_;
};

RootDatum build_datum(const CartanType& type, const SigmaSpec& sigma = {});
RootDatum build_datum(std::string_view type_label, std::optional<int> rank, const SigmaSpec& sigma = {});
/// Direct sum; sigma is the product of the factor automorphisms.
RootDatum product(const std::vector<RootDatum>& parts);

inline const std::vector<RatVec>& fundamental_weights(const RootDatum& d) { return d.fundamental_weights(); }
inline const std::vector<RatVec>& fundamental_coweights(const RootDatum& d) { return d.fundamental_coweights(); }

struct HighestRoot {
  RatVec root;
  std::vector<int> coefficients;
};

/// Highest root of an indecomposable datum, found as the unique positive root of
/// maximal height. Throws DomainError for products.
HighestRoot highest_root(const RootDatum& d);

/// 0-based nodes whose highest-root coefficient is 1.
std::vector<std::size_t> special_roots(const RootDatum& d);

/// <cochar, chr>.
Rational pairing(std::span<const Rational> cochar, std::span<const Rational> chr);

bool is_dominant(const RootDatum& d, std::span<const Rational> v);

/// Unique dominant element of the Weyl orbit of v, reached by reflecting in any
/// simple root that pairs negatively until none does.
Cocharacter dominant_representative(const RootDatum& d, Cocharacter v);

}  // namespace newtonkit
