#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace newtonkit::oracles {

namespace {

void require_small_rank(const RootDatum& d) {
  if (d.rank() > 3) throw DomainError("oracle limited to rank <= 3, got rank " + std::to_string(d.rank()));
}

RatVec reflect_local(const RootDatum& d, std::size_t i, const RatVec& v) {
  RatVec out = v;
  const Rational k = dot(v, d.simple_roots()[i]);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= k * d.simple_coroots()[i][j];
  return out;
}

// Row-reduces m in place and returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

// Basis of { z : a z = 0 } for a with `cols` columns.
std::vector<RatVec> nullspace(RatMatrix a, std::size_t cols) {
  const auto pivots = rref(a, cols);
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    RatVec z = zeros(cols);
    z[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = -a[r][f];
    basis.push_back(std::move(z));
  }
  return basis;
}

// Solves sum_i c_i columns[i] = rhs exactly; nullopt if inconsistent.
std::optional<RatVec> solve_columns(const std::vector<RatVec>& columns, const RatVec& rhs) {
  const std::size_t n = columns.size();
  RatMatrix aug(rhs.size(), RatVec(n + 1));
  for (std::size_t r = 0; r < rhs.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = columns[c][r];
    aug[r][n] = rhs[r];
  }
  const auto pivots = rref(aug, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  if (pivots.size() != n) throw DomainError("coroots are linearly dependent");
  RatVec c(n);
  for (std::size_t r = 0; r < n; ++r) c[pivots[r]] = aug[r][n];
  return c;
}

}  // namespace

std::vector<RatVec> weyl_orbit(const RootDatum& d, const RatVec& v) {
  d.check_dim(v);
  std::set<RatVec, LexLess> seen{v};
  std::vector<RatVec> frontier{v};
  while (!frontier.empty()) {
    std::vector<RatVec> next;
    for (const auto& u : frontier) {
      for (std::size_t i = 0; i < d.rank(); ++i) {
        auto w = reflect_local(d, i, u);
        if (seen.insert(w).second) {
          if (seen.size() > kWeylOrbitCap) throw DomainError("Weyl orbit exceeds the 50000-element cap");
          next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

bool hull_contains(const std::vector<RatVec>& points, const RatVec& x) {
  const std::size_t dim = x.size();
  const std::size_t rows = dim + 1;
  const std::size_t m = points.size();
  const std::size_t cols = m + rows;

  // Tableau: [lambda | artificial | rhs], last row holds reduced costs.
  RatMatrix t(rows + 1, RatVec(cols + 1, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < m; ++j) t[r][j] = r < dim ? points[j][r] : Rational(1);
    t[r][cols] = r < dim ? x[r] : Rational(1);
    if (t[r][cols] < 0) {
      for (std::size_t j = 0; j < m; ++j) t[r][j] = -t[r][j];
      t[r][cols] = -t[r][cols];
    }
    t[r][m + r] = 1;
  }
  auto& z = t[rows];
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < m; ++j) z[j] -= t[r][j];
    z[cols] -= t[r][cols];
  }
  std::vector<std::size_t> basis(rows);
  std::iota(basis.begin(), basis.end(), m);

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (z[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      const Rational ratio = t[r][cols] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen for phase one
    const Rational inv = 1 / t[leave][enter];
    for (auto& v : t[leave]) v *= inv;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t k = 0; k <= cols; ++k) t[r][k] -= f * t[leave][k];
    }
    basis[leave] = enter;
  }
  return z[cols] == 0;
}

}  // namespace

bool convex_hull_membership(const RootDatum& d, const RatVec& x, const RatVec& y) {
  require_small_rank(d);
  d.check_dim(x);
  return hull_contains(weyl_orbit(d, y), x);
}

GridSpec default_grid_spec(const RootDatum& d, const RatVec& mu) {
  Rational box = 0;
  for (const auto& v : weyl_orbit(d, mu)) {
    for (const auto& x : v) box = std::max(box, Rational(abs(x)));
  }
  if (box == 0) box = 1;
  const auto bound = static_cast<std::int64_t>(d.rank()) * d.connection_index();
  return {std::max<std::int64_t>(bound, 1), box};
}

std::set<RatVec, LexLess> grid_enumerate_bgmu(const RootDatum& d, const RatVec& mu, const GridSpec& spec) {
  require_small_rank(d);
  if (!d.split()) throw DomainError("grid oracle handles split data only");
  if (spec.denominator_bound <= 0 || spec.box_bound <= 0) throw DomainError("grid spec bounds must be positive");
  d.check_dim(mu);
  const std::size_t n = d.ambient_dim();
  const Rational step(1, spec.denominator_bound);
  const std::int64_t reach = floor(spec.box_bound * spec.denominator_bound).get_si();

  // Central constraints <z, nu> = <z, mu>, each solved at its last nonzero coordinate.
  RatMatrix roots(d.simple_roots().begin(), d.simple_roots().end());
  auto central = nullspace(roots, n);
  for (auto& z : central) std::reverse(z.begin(), z.end());
  const auto rev_pivots = rref(central, n);
  std::vector<std::optional<RatVec>> solve_at(n);
  for (std::size_t r = 0; r < rev_pivots.size(); ++r) {
    RatVec z = central[r];
    std::reverse(z.begin(), z.end());
    solve_at[n - 1 - rev_pivots[r]] = z;
  }

  // Dominance of alpha_i is checkable once its last supported coordinate is set.
  std::vector<std::vector<std::size_t>> check_at(n);
  for (std::size_t i = 0; i < d.rank(); ++i) {
    std::size_t last = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (d.simple_roots()[i][j] != 0) last = j;
    }
    check_at[last].push_back(i);
  }

  const auto orbit = weyl_orbit(d, mu);
  std::set<RatVec, LexLess> out;
  RatVec nu = zeros(n);

  const auto accept = [&]() {
    if (!hull_contains(orbit, nu)) return;
    const auto c = solve_columns(d.simple_coroots(), sub(mu, nu));
    if (!c) return;
    for (std::size_t i = 0; i < d.rank(); ++i) {
      if (dot(nu, d.simple_roots()[i]) != 0 && !is_integer((*c)[i])) return;
    }
    out.insert(nu);
  };

  const auto recurse = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      accept();
      return;
    }
    const auto descend = [&]() {
      for (auto i : check_at[j]) {
        if (dot(nu, d.simple_roots()[i]) < 0) return;
      }
      self(self, j + 1);
    };
    if (solve_at[j]) {
      const RatVec& z = *solve_at[j];
      Rational acc = dot(z, mu);
      for (std::size_t l = 0; l < j; ++l) acc -= z[l] * nu[l];
      const Rational value = acc / z[j];
      if (abs(value) > spec.box_bound || !is_integer(value * spec.denominator_bound)) return;
      nu[j] = value;
      descend();
    } else {
      for (std::int64_t k = -reach; k <= reach; ++k) {
        nu[j] = step * k;
        descend();
      }
    }
    nu[j] = 0;
  };
  recurse(recurse, 0);
  return out;
}

namespace {

struct ShapeLayout {
  std::size_t size;
  // Matrix positions carrying each parameter.
  std::vector<std::vector<TorusRoot>> params;
};

ShapeLayout layout(UnipotentShape shape) {
  switch (shape) {
    case UnipotentShape::gl2_upper:
      return {2, {{{0, 1}}}};
    case UnipotentShape::gl3_upper:
      return {3, {{{0, 1}}, {{0, 2}}, {{1, 2}}}};
    case UnipotentShape::sp4_siegel_lower:
      return {4, {{{2, 0}, {3, 1}}, {{2, 1}}, {{3, 0}}}};
  }
  throw DomainError("unknown unipotent shape");
}

}  // namespace

std::vector<TorusRoot> shape_roots(UnipotentShape shape) {
  std::vector<TorusRoot> out;
  for (const auto& positions : layout(shape).params) out.push_back(positions.front());
  return out;
}

std::size_t shape_size(UnipotentShape shape) { return layout(shape).size; }

std::int64_t coset_count_bruteforce(const HeckeValuation& eps, UnipotentShape shape, std::int64_t p, int k) {
  const auto lay = layout(shape);
  if (lay.size > 4) throw DomainError("matrix size above 4");
  if (eps.dim() != lay.size) throw DomainError("valuation has the wrong size for this shape");
  if (!eps.integral()) throw DomainError("valuations must be integral");
  if (p != eps.p()) throw DomainError("prime does not match the valuation");
  if (k < 1) throw DomainError("k must be positive");
  std::int64_t modulus = 1;
  for (int i = 0; i < k; ++i) {
    modulus *= p;
    if (modulus > 625) throw DomainError("p^k exceeds 625");
  }

  const std::size_t np = lay.params.size();
  std::vector<std::int64_t> scale_by(np);
  for (std::size_t q = 0; q < np; ++q) {
    std::optional<Rational> e;
    for (const auto& pos : lay.params[q]) {
      const Rational v = eps.full()[pos.a] - eps.full()[pos.b];
      if (e && *e != v) throw DomainError("eps does not normalize the unipotent shape");
      e = v;
    }
    if (*e < 0 || *e >= k) throw DomainError("root valuation " + to_string(*e) + " outside [0, k)");
    std::int64_t f = 1;
    for (long i = 0; i < e->get_num().get_si(); ++i) f *= p;
    scale_by[q] = f;
  }

  std::int64_t order = 1;
  for (std::size_t q = 0; q < np; ++q) order *= modulus;

  using Matrix = std::vector<std::vector<std::int64_t>>;
  const auto decode = [&](std::int64_t code) {
    Matrix m(lay.size, std::vector<std::int64_t>(lay.size, 0));
    for (std::size_t i = 0; i < lay.size; ++i) m[i][i] = 1;
    for (std::size_t q = 0; q < np; ++q) {
      const std::int64_t v = code % modulus;
      code /= modulus;
      for (const auto& pos : lay.params[q]) m[pos.a][pos.b] = v;
    }
    return m;
  };
  const auto encode = [&](const Matrix& m) {
    std::int64_t code = 0;
    for (std::size_t q = np; q-- > 0;) {
      const auto& pos = lay.params[q].front();
      code = code * modulus + m[pos.a][pos.b];
    }
    return code;
  };
  const auto multiply = [&](const Matrix& a, const Matrix& b) {
    Matrix c(lay.size, std::vector<std::int64_t>(lay.size, 0));
    for (std::size_t i = 0; i < lay.size; ++i) {
      for (std::size_t l = 0; l < lay.size; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < lay.size; ++j) c[i][j] = (c[i][j] + a[i][l] * b[l][j]) % modulus;
      }
    }
    return c;
  };

  // eps U eps^-1, entrywise scaling by p^<eps, alpha>.
  std::vector<bool> in_h(static_cast<std::size_t>(order), false);
  std::vector<Matrix> h;
  for (std::int64_t code = 0; code < order; ++code) {
    Matrix m = decode(code);
    for (std::size_t q = 0; q < np; ++q) {
      for (const auto& pos : lay.params[q]) m[pos.a][pos.b] = m[pos.a][pos.b] * scale_by[q] % modulus;
    }
    const auto c = static_cast<std::size_t>(encode(m));
    if (!in_h[c]) {
      in_h[c] = true;
      h.push_back(std::move(m));
    }
  }

  std::vector<bool> visited(static_cast<std::size_t>(order), false);
  std::int64_t cosets = 0;
  for (std::int64_t code = 0; code < order; ++code) {
    if (visited[static_cast<std::size_t>(code)]) continue;
    ++cosets;
    const Matrix u = decode(code);
    for (const auto& x : h) visited[static_cast<std::size_t>(encode(multiply(u, x)))] = true;
  }
  return cosets;
}

namespace {

std::vector<Rational> unit_slopes(const SlopeProfile& profile) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    for (std::int64_t m = 0; m < profile.mults()[k]; ++m) out.push_back(profile.slopes()[k]);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

Rational brute_max_degree(const SlopeProfile& profile, std::int64_t h) {
  const auto units = unit_slopes(profile);
  if (h < 0 || static_cast<std::size_t>(h) > units.size()) throw DomainError("height out of range");
  return std::accumulate(units.begin(), units.begin() + h, Rational(0));
}

FoldDegrees fold_degrees(const SlopeProfile& profile) {
  const auto units = unit_slopes(profile);
  FoldDegrees fd;
  Rational acc = 0;
  for (std::size_t j = 0; j < units.size(); ++j) {
    acc += units[j];
    if (j + 1 == units.size() || units[j + 1] != units[j]) {
      fd.heights.push_back(static_cast<std::int64_t>(j + 1));
      fd.d.push_back(acc);
    }
  }
  std::vector<Rational> distinct(units.begin(), units.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t a = 0; a < distinct.size(); ++a) {
    for (std::size_t b = a + 1; b < distinct.size(); ++b) {
      const Rational gap = abs(distinct[a] - distinct[b]) / 4;
      if (!fd.delta || gap < *fd.delta) fd.delta = gap;
    }
  }
  return fd;
}

bool polygon_leq(const SlopeProfile& a, const SlopeProfile& b) {
  const auto ua = unit_slopes(a);
  const auto ub = unit_slopes(b);
  if (ua.size() != ub.size()) throw DomainError("profiles have different total heights");
  const auto h = static_cast<std::int64_t>(ua.size());
  if (brute_max_degree(a, h) != brute_max_degree(b, h)) throw DomainError("profiles have different total degrees");
  for (std::int64_t j = 0; j <= h; ++j) {
    if (brute_max_degree(a, j) > brute_max_degree(b, j)) return false;
  }
  return true;
}

bool uniqueness_bruteforce(const SlopeProfile& profile, std::size_t i) {
  const auto fd = fold_degrees(profile);
  if (i >= fd.heights.size()) throw DomainError("index out of range");
  if (!fd.delta) return true;
  const auto hi = fd.heights[i];
  const auto total = fd.heights.back();
  const Rational budget = 2 * (fd.d[i] - *fd.delta);
  for (std::int64_t h = 0; h < hi; ++h) {
    if (2 * hi - h > total) continue;
    if (brute_max_degree(profile, h) + brute_max_degree(profile, 2 * hi - h) > budget) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<std::int64_t>;  // coefficients, lowest degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& g, std::int64_t p) {
  trim(f);
  const std::int64_t lead_inv = [&] {
    for (std::int64_t x = 1; x < p; ++x) {
      if (g.back() * x % p == 1) return x;
    }
    return std::int64_t{1};
  }();
  while (f.size() >= g.size()) {
    const std::int64_t factor = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t j = 0; j < g.size(); ++j) f[shift + j] = ((f[shift + j] - factor * g[j]) % p + p) % p;
    trim(f);
  }
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

// Monic polynomials of the given degree, enumerated by their lower coefficients.
std::vector<Poly> monic_polys(int degree, std::int64_t p) {
  std::int64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  std::vector<Poly> out;
  for (std::int64_t code = 0; code < count; ++code) {
    Poly f(static_cast<std::size_t>(degree) + 1, 0);
    std::int64_t c = code;
    for (int i = 0; i < degree; ++i) {
      f[static_cast<std::size_t>(i)] = c % p;
      c /= p;
    }
    f.back() = 1;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::int64_t field_unit_exponent(std::int64_t p, int w) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (w < 1) throw DomainError("w must be positive");
  std::int64_t q = 1;
  for (int i = 0; i < w; ++i) {
    q *= p;
    if (q > 243) throw DomainError("p^w exceeds 243");
  }

  Poly modulus;
  for (auto& f : monic_polys(w, p)) {
    bool irreducible = true;
    for (int dg = 1; dg <= w / 2 && irreducible; ++dg) {
      for (const auto& g : monic_polys(dg, p)) {
        if (poly_mod(f, g, p).empty()) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) {
      modulus = std::move(f);
      break;
    }
  }

  std::int64_t exponent = 1;
  for (std::int64_t code = 1; code < q; ++code) {
    Poly a(static_cast<std::size_t>(w), 0);
    std::int64_t c = code;
    for (int i = 0; i < w; ++i) {
      a[static_cast<std::size_t>(i)] = c % p;
      c /= p;
    }
    trim(a);
    Poly power = a;
    std::int64_t order = 1;
    while (power != Poly{1}) {
      power = poly_mod(poly_mul(power, a, p), modulus, p);
      ++order;
      if (order > q) throw DomainError("field construction failed");
    }
    exponent = std::lcm(exponent, order);
  }
  return exponent;
}

}  // namespace newtonkit::oracles
