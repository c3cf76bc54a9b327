#include "newtonkit/linalg.hpp"

#include <utility>

namespace newtonkit::linalg {

namespace {

void require_square(const RatMatrix& a) {
  for (const auto& row : a) {
    if (row.size() != a.size()) throw DomainError("matrix is not square");
  }
}

// Reduces the augmented matrix [a | rhs] in place. Returns false if a is singular.
bool gauss_jordan(RatMatrix& a, RatMatrix& rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);

    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (auto& x : rhs[col]) x *= inv;

    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      for (std::size_t c = 0; c < rhs[r].size(); ++c) rhs[r][c] -= f * rhs[col][c];
    }
  }
  return true;
}

}  // namespace

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  require_square(a);
  if (b.size() != a.size()) throw DomainError("right-hand side has wrong length");
  RatMatrix work = a;
  RatMatrix rhs(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = {b[i]};
  if (!gauss_jordan(work, rhs)) return std::nullopt;
  RatVec x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs[i][0];
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  require_square(a);
  const std::size_t n = a.size();
  RatMatrix work = a;
  RatMatrix rhs(n, zeros(n));
  for (std::size_t i = 0; i < n; ++i) rhs[i][i] = 1;
  if (!gauss_jordan(work, rhs)) return std::nullopt;
  return rhs;
}

Rational determinant(RatMatrix a) {
  require_square(a);
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

std::size_t rank(RatMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[i][c] -= f * a[r][c];
    }
    ++r;
  }
  return r;
}

RatMatrix transpose(const RatMatrix& a) {
  if (a.empty()) return {};
  RatMatrix t(a.front().size(), RatVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

RatVec multiply(const RatMatrix& a, const RatVec& x) {
  RatVec y;
  y.reserve(a.size());
  for (const auto& row : a) y.push_back(dot(row, x));
  return y;
}

}  // namespace newtonkit::linalg
