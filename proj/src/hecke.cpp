#include "newtonkit/hecke.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace newtonkit {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

namespace {
void require_odd_prime(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not an odd prime");
}
}  // namespace

HeckeValuation::HeckeValuation(RatVec full, Rational s, std::int64_t p)
    : full_(std::move(full)), s_(std::move(s)), p_(p) {
  require_odd_prime(p_);
  if (full_.empty()) throw DomainError("valuation vector is empty");
}

HeckeValuation HeckeValuation::from_torus(RatVec t, Rational s, std::int64_t p) {
  RatVec full = t;
  for (auto it = t.rbegin(); it != t.rend(); ++it) full.push_back(s - *it);
  return HeckeValuation(std::move(full), std::move(s), p);
}

HeckeValuation HeckeValuation::from_full(RatVec full, Rational s, std::int64_t p) {
  return HeckeValuation(std::move(full), std::move(s), p);
}

HeckeValuation HeckeValuation::filtration_element(std::int64_t h, std::size_t dim_v, std::int64_t p) {
  if (h < 1 || static_cast<std::size_t>(h) > dim_v) throw DomainError("filtration height out of range");
  RatVec full = zeros(dim_v);
  for (std::int64_t j = 0; j < h; ++j) full[static_cast<std::size_t>(j)] = 1;
  return HeckeValuation(std::move(full), 1, p);
}

RatVec HeckeValuation::t() const { return RatVec(full_.begin(), full_.begin() + static_cast<std::ptrdiff_t>(dim() / 2)); }

bool HeckeValuation::symplectic_shape() const {
  if (dim() % 2 != 0) return false;
  for (std::size_t j = 0; j < dim(); ++j) {
    if (full_[j] + full_[dim() - 1 - j] != s_) return false;
  }
  return true;
}

bool HeckeValuation::in_positive_monoid() const {
  if (!symplectic_shape() || s_ <= 0) return false;
  const auto t_part = t();
  if (t_part.front() < 0) return false;
  return std::is_sorted(t_part.begin(), t_part.end());
}

bool HeckeValuation::integral() const {
  return is_integer(s_) && std::all_of(full_.begin(), full_.end(), [](const Rational& v) { return is_integer(v); });
}

HeckeValuation HeckeValuation::operator*(const HeckeValuation& other) const {
  if (other.p_ != p_) throw DomainError("valuations at different primes");
  return HeckeValuation(add(full_, other.full_), s_ + other.s_, p_);
}

std::vector<TorusRoot> gl_roots(std::size_t dim) {
  std::vector<TorusRoot> out;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      if (a != b) out.push_back({a, b});
    }
  }
  return out;
}

std::vector<TorusRoot> symplectic_roots(std::size_t n) {
  const std::size_t dim = 2 * n;
  std::set<TorusRoot> reps;
  for (const auto& r : gl_roots(dim)) {
    const TorusRoot mirror{dim - 1 - r.b, dim - 1 - r.a};
    reps.insert(std::min(r, mirror));
  }
  return {reps.begin(), reps.end()};
}

std::vector<TorusRoot> parabolic_roots(const RatVec& x, const std::vector<TorusRoot>& roots) {
  std::vector<TorusRoot> out;
  for (const auto& r : roots) {
    if (r.a >= x.size() || r.b >= x.size()) throw DomainError("root outside the torus");
    if (x[r.a] - x[r.b] > 0) out.push_back(r);
  }
  return out;
}

Rational m_epsilon_valuation(const HeckeValuation& eps, const std::vector<TorusRoot>& parabolic) {
  Rational total = 0;
  for (const auto& r : parabolic) {
    if (r.a >= eps.dim() || r.b >= eps.dim()) throw DomainError("root outside the torus");
    const Rational v = r.pair(eps);
    if (v < 0) {
      throw DomainError("eps pairs negatively with root e_" + std::to_string(r.a + 1) + " - e_" +
                        std::to_string(r.b + 1) + "; not in the positive monoid for this parabolic");
    }
    total += v;
  }
  return total;
}

Rational x_epsilon_valuation(const HeckeValuation& eps, const std::vector<TorusRoot>& parabolic) {
  return m_epsilon_valuation(eps, parabolic);
}

mpz_class materialize(std::int64_t p, const Rational& v) {
  if (!is_integer(v) || v < 0) throw DomainError("p^" + to_string(v) + " is not an integer");
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), v.get_num().get_ui());
  return out;
}

Rational lambda_g_valuation(const HeckeValuation& eps) {
  Rational total = 0;
  for (const auto& v : eps.t()) total += v;
  return total;
}

HeckeValuation epsilon_prime_valuations(std::int64_t h, const Rational& deg, const HeckeValuation& base) {
  const auto dim = static_cast<std::int64_t>(base.dim());
  if (h < 1 || h > dim) throw DomainError("height " + std::to_string(h) + " out of range");
  if (base != HeckeValuation::filtration_element(h, base.dim(), base.p())) {
    throw DomainError("base element is not the filtration element of height " + std::to_string(h));
  }
  if (deg <= 0 || deg > h) throw DomainError("degree " + to_string(deg) + " outside (0, h]");
  const std::int64_t first = std::max<std::int64_t>(h - 1, 1);
  const std::int64_t second = dim - h + 1;
  if (second < 1 || second > dim) throw DomainError("perturbation slot out of range");

  RatVec full = base.full();
  full[static_cast<std::size_t>(first - 1)] += deg - 1;
  full[static_cast<std::size_t>(second - 1)] += 1 - deg;
  return HeckeValuation::from_full(std::move(full), base.s(), base.p());
}

namespace {
std::vector<HeckeValuation> perturbed_elements(const FiltrationSteps& steps, std::size_t dim_v, std::int64_t p) {
  if (steps.empty()) throw DomainError("no canonical filtration steps");
  std::vector<HeckeValuation> out;
  for (const auto& [h, deg] : steps) {
    out.push_back(epsilon_prime_valuations(h, deg, HeckeValuation::filtration_element(h, dim_v, p)));
  }
  return out;
}
}  // namespace

Rational n_g_constant(const FiltrationSteps& steps, std::size_t dim_v, std::int64_t p) {
  const auto eps = perturbed_elements(steps, dim_v, p);
  Rational best = lambda_g_valuation(eps.front());
  for (const auto& e : eps) best = std::min(best, lambda_g_valuation(e));
  return best;
}

Rational c_constant(const FiltrationSteps& steps, std::size_t dim_v, const std::vector<TorusRoot>& parabolic,
                    std::int64_t p) {
  const auto eps = perturbed_elements(steps, dim_v, p);
  Rational best = m_epsilon_valuation(eps.front(), parabolic);
  for (const auto& e : eps) best = std::max(best, m_epsilon_valuation(e, parabolic));
  return best;
}

std::int64_t hasse_number(std::int64_t w, std::int64_t p) {
  if (w < 1) throw DomainError("splitting degree w must be at least 1");
  require_odd_prime(p);
  std::int64_t power = 1;
  for (std::int64_t k = 0; k < w; ++k) {
    if (power > std::numeric_limits<std::int64_t>::max() / p) throw DomainError("p^w overflows 64 bits");
    power *= p;
  }
  return power - 1;
}

}  // namespace newtonkit
