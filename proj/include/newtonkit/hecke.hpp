#pragma once

#include "newtonkit/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace newtonkit {

/// p-adic valuations of a diagonal element of GSp(V) (or GL(V)). The full
/// vector lists the valuations of the dim V diagonal entries; elements of the
/// form diag(Lambda, p^s Lambda^{-1}) have full = (t_1..t_n, s-t_n..s-t_1).
class HeckeValuation {
 public:
  /// diag(p^{t_1}, ..., p^{t_n}, p^{s-t_n}, ..., p^{s-t_1}).
  static HeckeValuation from_torus(RatVec t, Rational s, std::int64_t p);
  /// Arbitrary diagonal valuations, used for perturbed elements.
  static HeckeValuation from_full(RatVec full, Rational s, std::int64_t p);
  /// Valuation 1 on the first h slots and 0 on the rest, similitude 1.
  static HeckeValuation filtration_element(std::int64_t h, std::size_t dim_v, std::int64_t p);

  const RatVec& full() const { return full_; }
  const Rational& s() const { return s_; }
  std::int64_t p() const { return p_; }
  std::size_t dim() const { return full_.size(); }
  /// First half of the full vector.
  RatVec t() const;

  /// full_j + full_{dim+1-j} = s for every j.
  bool symplectic_shape() const;
  /// Symplectic shape with 0 <= t_1 <= ... <= t_n and s > 0.
  bool in_positive_monoid() const;
  bool integral() const;

  /// Componentwise sum of valuations (product of the diagonal elements).
  HeckeValuation operator*(const HeckeValuation& other) const;

  friend bool operator==(const HeckeValuation&, const HeckeValuation&) = default;

 private:
  HeckeValuation(RatVec full, Rational s, std::int64_t p);

  RatVec full_;
  Rational s_;
  std::int64_t p_;
};

/// The root e_a - e_b of the diagonal torus of GL(V), 0-based coordinates.
/// Its root group is the matrix entry (a, b).
struct TorusRoot {
  std::size_t a;
  std::size_t b;

  Rational pair(const HeckeValuation& eps) const { return eps.full()[a] - eps.full()[b]; }
  friend auto operator<=>(const TorusRoot&, const TorusRoot&) = default;
};

/// All roots e_a - e_b of GL_dim.
std::vector<TorusRoot> gl_roots(std::size_t dim);
/// Roots of Sp_{2n} inside GL_{2n}, one representative per pair
/// (a, b) ~ (2n-1-b, 2n-1-a).
std::vector<TorusRoot> symplectic_roots(std::size_t n);
/// Roots from `roots` pairing strictly positively with x; x defines the parabolic.
std::vector<TorusRoot> parabolic_roots(const RatVec& x, const std::vector<TorusRoot>& roots);

/// val_p of m_eps = [U(O) : eps U(O) eps^{-1} cap U(O)], which is the sum of
/// <eps, alpha> over the roots of U. Throws DomainError if some pairing is
/// negative (eps not in the positive monoid for the parabolic).
Rational m_epsilon_valuation(const HeckeValuation& eps, const std::vector<TorusRoot>& parabolic);

/// val_p of #X_eps, the number of single cosets in the double coset. Same index
/// as m_eps, hence the same formula.
Rational x_epsilon_valuation(const HeckeValuation& eps, const std::vector<TorusRoot>& parabolic);

/// p^v as an integer; v must be a non-negative integer.
mpz_class materialize(std::int64_t p, const Rational& v);

/// val_p of lambda_G(eps) = t_1 t_2 ... t_n, i.e. the sum of the first n entries.
Rational lambda_g_valuation(const HeckeValuation& eps);

/// eps'_{H_i}: base with -1 + deg added at the (h-1)-th slot (1-based; slot 1
/// when h = 1) and 1 - deg at the (dim V - h + 1)-th slot. base must be the
/// filtration element for h and 0 < deg <= h.
HeckeValuation epsilon_prime_valuations(std::int64_t h, const Rational& deg, const HeckeValuation& base);

/// (h_i, d_i) for the canonical filtration steps i = 1..r-1.
using FiltrationSteps = std::vector<std::pair<std::int64_t, Rational>>;

/// n_G = min_i val_p(lambda_G(eps'_{H_i})). Throws DomainError on empty steps.
Rational n_g_constant(const FiltrationSteps& steps, std::size_t dim_v, std::int64_t p);

/// val_p(C) = max_i val_p(m_{eps'_{H_i}}).
Rational c_constant(const FiltrationSteps& steps, std::size_t dim_v, const std::vector<TorusRoot>& parabolic,
                    std::int64_t p);

/// p^w - 1 for w >= 1 and an odd prime p.
std::int64_t hasse_number(std::int64_t w, std::int64_t p);

bool is_prime(std::int64_t n);

}  // namespace newtonkit
