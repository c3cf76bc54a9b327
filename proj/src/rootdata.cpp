#include "newtonkit/rootdata.hpp"

#include "newtonkit/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace newtonkit {

std::string CartanType::label() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanType parse_cartan_type(std::string_view label, std::optional<int> rank) {
  if (label.empty()) throw DomainError("empty type label");
  const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(label.front())));
  if (head < 'A' || head > 'G') throw DomainError("unknown type '" + std::string(label) + "'");
  std::optional<int> embedded;
  if (label.size() > 1) {
    const auto digits = label.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      throw DomainError("unknown type '" + std::string(label) + "'");
    }
    embedded = std::stoi(std::string(digits));
  }
  if (embedded && rank && *embedded != *rank) {
    throw DomainError("type label " + std::string(label) + " disagrees with rank " + std::to_string(*rank));
  }
  const auto n = embedded ? embedded : rank;
  if (!n) throw DomainError("rank missing for type " + std::string(label));

  const CartanType t{static_cast<Family>(head), *n};
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.rank >= 1; break;
    case Family::B:
    case Family::C: ok = t.rank >= 2; break;
    case Family::D: ok = t.rank >= 3; break;
    case Family::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case Family::F: ok = t.rank == 4; break;
    case Family::G: ok = t.rank == 2; break;
  }
  if (!ok) throw DomainError("invalid rank " + std::to_string(t.rank) + " for type " + std::string(1, head));
  return t;
}

SigmaSpec SigmaSpec::flip() {
  SigmaSpec s;
  s.kind_ = Kind::flip;
  return s;
}

SigmaSpec SigmaSpec::permutation(std::vector<std::size_t> one_based) {
  SigmaSpec s;
  s.kind_ = Kind::permutation;
  s.perm_ = std::move(one_based);
  return s;
}

SigmaSpec SigmaSpec::parse(std::string_view text) {
  if (text.empty() || text == "identity" || text == "id") return identity();
  if (text == "flip") return flip();
  std::vector<std::size_t> perm;
  for (const auto& r : parse_rational_list(text)) {
    if (!is_integer(r) || r < 1) throw DomainError("sigma entries must be positive integers");
    perm.push_back(r.get_num().get_ui());
  }
  return permutation(std::move(perm));
}

namespace {

RatVec unit(std::size_t dim, std::size_t i, const Rational& k = 1) {
  RatVec v = zeros(dim);
  v[i] = k;
  return v;
}

RatVec diff(std::size_t dim, std::size_t i, std::size_t j) {
  RatVec v = zeros(dim);
  v[i] = 1;
  v[j] = -1;
  return v;
}

struct Basis {
  std::size_t dim;
  std::vector<RatVec> roots;
};

Basis e8_prefix(int n) {
  const Rational h(1, 2);
  std::vector<RatVec> all;
  all.push_back({h, -h, -h, -h, -h, -h, -h, h});
  RatVec a2 = zeros(8);
  a2[0] = 1;
  a2[1] = 1;
  all.push_back(a2);
  for (std::size_t k = 0; k < 6; ++k) all.push_back(diff(8, k + 1, k));
  all.resize(static_cast<std::size_t>(n));
  return {8, all};
}

Basis simple_basis(const CartanType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<RatVec> roots;
  switch (t.family) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) roots.push_back(diff(n + 1, i, i + 1));
      return {n + 1, roots};
    case Family::B:
    case Family::C:
    case Family::D:
      for (std::size_t i = 0; i + 1 < n; ++i) roots.push_back(diff(n, i, i + 1));
      if (t.family == Family::B) {
        roots.push_back(unit(n, n - 1));
      } else if (t.family == Family::C) {
        roots.push_back(unit(n, n - 1, 2));
      } else {
        RatVec last = zeros(n);
        last[n - 2] = 1;
        last[n - 1] = 1;
        roots.push_back(last);
      }
      return {n, roots};
    case Family::E:
      return e8_prefix(t.rank);
    case Family::F: {
      const Rational h(1, 2);
      roots.push_back(diff(4, 1, 2));
      roots.push_back(diff(4, 2, 3));
      roots.push_back(unit(4, 3));
      roots.push_back({h, -h, -h, -h});
      return {4, roots};
    }
    case Family::G:
      roots.push_back({1, -1, 0});
      roots.push_back({-2, 1, 1});
      return {3, roots};
  }
  throw DomainError("unreachable type");
}

std::vector<std::size_t> named_flip(const CartanType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), 0);
  switch (t.family) {
    case Family::A:
      if (n < 2) break;
      std::reverse(s.begin(), s.end());
      return s;
    case Family::D:
      std::swap(s[n - 2], s[n - 1]);
      return s;
    case Family::E:
      if (n != 6) break;
      std::swap(s[0], s[5]);
      std::swap(s[2], s[4]);
      return s;
    default:
      break;
  }
  throw DomainError("type " + t.label() + " has no nontrivial diagram automorphism");
}

int permutation_order(const std::vector<std::size_t>& s) {
  long order = 1;
  std::vector<bool> seen(s.size(), false);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (std::size_t j = i; !seen[j]; j = s[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

}  // namespace

RootDatum build_datum(const CartanType& type, const SigmaSpec& sigma_spec) {
  const CartanType t = parse_cartan_type(type.label(), std::nullopt);
  RootDatum d;
  auto basis = simple_basis(t);
  d.ambient_dim_ = basis.dim;
  d.simple_roots_ = std::move(basis.roots);
  d.factors_.push_back({t, 0, 0, d.ambient_dim_});

  const std::size_t n = d.simple_roots_.size();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  if (sigma_spec.kind() == SigmaSpec::Kind::flip) {
    sigma = named_flip(t);
  } else if (sigma_spec.kind() == SigmaSpec::Kind::permutation) {
    const auto& p = sigma_spec.one_based();
    if (p.size() != n) throw DomainError("sigma must permute " + std::to_string(n) + " nodes");
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] < 1 || p[i] > n) throw DomainError("sigma entry out of range");
      sigma[i] = p[i] - 1;
    }
  }
  d.finish(std::move(sigma));
  return d;
}

RootDatum build_datum(std::string_view type_label, std::optional<int> rank, const SigmaSpec& sigma) {
  return build_datum(parse_cartan_type(type_label, rank), sigma);
}

RootDatum product(const std::vector<RootDatum>& parts) {
  if (parts.empty()) throw DomainError("product of zero root data");
  RootDatum d;
  for (const auto& p : parts) d.ambient_dim_ += p.ambient_dim();
  std::vector<std::size_t> sigma;
  std::size_t node_offset = 0;
  std::size_t coord_offset = 0;
  for (const auto& p : parts) {
    for (const auto& f : p.factors()) {
      d.factors_.push_back({f.type, f.first_node + node_offset, f.first_coord + coord_offset, f.ambient_dim});
    }
    for (const auto& root : p.simple_roots()) {
      RatVec v = zeros(d.ambient_dim_);
      std::copy(root.begin(), root.end(), v.begin() + static_cast<std::ptrdiff_t>(coord_offset));
      d.simple_roots_.push_back(std::move(v));
    }
    for (auto s : p.sigma()) sigma.push_back(s + node_offset);
    node_offset += p.rank();
    coord_offset += p.ambient_dim();
  }
  d.finish(std::move(sigma));
  return d;
}

void RootDatum::finish(std::vector<std::size_t> sigma) {
  const std::size_t n = simple_roots_.size();
  simple_coroots_.clear();
  for (const auto& a : simple_roots_) simple_coroots_.push_back(scale(Rational(2) / dot(a, a), a));

  cartan_.assign(n, std::vector<int>(n, 0));
  RatMatrix a(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = dot(simple_coroots_[j], simple_roots_[i]);
      if (!is_integer(a[i][j])) throw DomainError("non-integral Cartan entry");
      cartan_[i][j] = static_cast<int>(a[i][j].get_num().get_si());
    }
  }

  std::vector<bool> hit(n, false);
  for (auto s : sigma) {
    if (s >= n || hit[s]) throw DomainError("sigma is not a permutation of the simple roots");
    hit[s] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (cartan_[sigma[i]][sigma[j]] != cartan_[i][j]) {
        throw DomainError("sigma does not preserve the Cartan matrix");
      }
    }
  }
  sigma_ = std::move(sigma);
  sigma_order_ = permutation_order(sigma_);

  const auto inv = linalg::inverse(a);
  if (!inv) throw DomainError("degenerate Cartan matrix");
  span_weights_.assign(n, zeros(ambient_dim_));
  coweights_.assign(n, zeros(ambient_dim_));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      axpy((*inv)[i][k], simple_roots_[k], span_weights_[i]);
      axpy((*inv)[k][i], simple_coroots_[k], coweights_[i]);
    }
  }

  weights_ = span_weights_;
  for (const auto& f : factors_) {
    if (f.type.family != Family::A) continue;
    for (std::size_t i = 0; i < static_cast<std::size_t>(f.type.rank); ++i) {
      RatVec w = zeros(ambient_dim_);
      for (std::size_t j = 0; j <= i; ++j) w[f.first_coord + j] = 1;
      weights_[f.first_node + i] = std::move(w);
    }
  }

  // Root closure under simple reflections of characters.
  std::set<RatVec, LexLess> roots(simple_roots_.begin(), simple_roots_.end());
  std::vector<RatVec> queue(simple_roots_.begin(), simple_roots_.end());
  while (!queue.empty()) {
    RatVec beta = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      RatVec image = beta;
      axpy(-dot(simple_coroots_[i], beta), simple_roots_[i], image);
      if (roots.insert(image).second) queue.push_back(std::move(image));
    }
  }
  positive_roots_.clear();
  positive_coeffs_.clear();
  for (const auto& beta : roots) {
    std::vector<int> c(n);
    bool positive = true;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational ci = dot(coweights_[i], beta);
      c[i] = static_cast<int>(ci.get_num().get_si());
      if (ci < 0) positive = false;
    }
    if (!positive) continue;
    positive_roots_.push_back(beta);
    positive_coeffs_.push_back(std::move(c));
  }
}

std::string RootDatum::label() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "x";
    out += f.type.label();
  }
  return out;
}

std::vector<std::vector<std::size_t>> RootDatum::sigma_orbits() const {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> seen(rank(), false);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t j = i; !seen[j]; j = sigma_[j]) {
      seen[j] = true;
      orbit.push_back(j);
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

void RootDatum::check_dim(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) {
    throw DomainError("vector of length " + std::to_string(v.size()) + " does not live in the ambient space of " +
                      label() + " (dimension " + std::to_string(ambient_dim_) + ")");
  }
}

RatVec RootDatum::coroot_coefficients(std::span<const Rational> v) const {
  check_dim(v);
  RatVec c;
  c.reserve(rank());
  for (const auto& w : span_weights_) c.push_back(dot(v, w));
  return c;
}

RatVec RootDatum::from_coroot_coefficients(std::span<const Rational> c) const {
  if (c.size() != rank()) throw DomainError("coefficient vector has wrong length");
  RatVec v = zeros(ambient_dim_);
  for (std::size_t i = 0; i < rank(); ++i) axpy(c[i], simple_coroots_[i], v);
  return v;
}

RatVec RootDatum::central_part(std::span<const Rational> v) const {
  return sub(v, from_coroot_coefficients(coroot_coefficients(v)));
}

bool RootDatum::in_coroot_span(std::span<const Rational> v) const { return is_zero(central_part(v)); }

RatVec RootDatum::reflect(std::size_t i, std::span<const Rational> v) const {
  check_dim(v);
  RatVec out(v.begin(), v.end());
  axpy(-dot(v, simple_roots_.at(i)), simple_coroots_[i], out);
  return out;
}

RatVec RootDatum::apply_sigma(std::span<const Rational> v) const {
  const RatVec c = coroot_coefficients(v);
  RatVec out = sub(v, from_coroot_coefficients(c));
  for (std::size_t i = 0; i < rank(); ++i) axpy(c[i], simple_coroots_[sigma_[i]], out);
  return out;
}

long RootDatum::connection_index() const {
  RatMatrix a(rank(), RatVec(rank()));
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) a[i][j] = cartan_[i][j];
  }
  Rational det = linalg::determinant(a);
  return std::abs(det.get_num().get_si());
}

HighestRoot highest_root(const RootDatum& d) {
  if (!d.indecomposable()) throw DomainError("highest_root needs an indecomposable datum; query each factor");
  const auto& coeffs = d.positive_root_coefficients();
  std::size_t best = 0;
  int best_height = -1;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const int h = std::accumulate(coeffs[k].begin(), coeffs[k].end(), 0);
    if (h > best_height) {
      best_height = h;
      best = k;
    }
  }
  return {d.positive_roots()[best], coeffs[best]};
}

std::vector<std::size_t> special_roots(const RootDatum& d) {
  const auto hr = highest_root(d);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < hr.coefficients.size(); ++i) {
    if (hr.coefficients[i] == 1) out.push_back(i);
  }
  return out;
}

Rational pairing(std::span<const Rational> cochar, std::span<const Rational> chr) { return dot(cochar, chr); }

bool is_dominant(const RootDatum& d, std::span<const Rational> v) {
  d.check_dim(v);
  return std::all_of(d.simple_roots().begin(), d.simple_roots().end(),
                     [&](const RatVec& a) { return dot(v, a) >= 0; });
}

Cocharacter dominant_representative(const RootDatum& d, Cocharacter v) {
  d.check_dim(v);
  // Each reflection strictly increases the pairing with a regular dominant
  // weight, and the orbit is finite, so this terminates.
  while (true) {
    std::size_t i = 0;
    while (i < d.rank() && dot(v, d.simple_roots()[i]) >= 0) ++i;
    if (i == d.rank()) return v;
    v = d.reflect(i, v);
  }
}

}  // namespace newtonkit
