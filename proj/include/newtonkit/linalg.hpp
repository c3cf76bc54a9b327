#pragma once

#include "newtonkit/rational.hpp"

#include <optional>

namespace newtonkit::linalg {

/// Solves A x = b for square A by Gauss-Jordan elimination with exact pivots.
/// Returns nullopt when A is singular.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

/// Inverse of a square matrix, nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& a);

Rational determinant(RatMatrix a);

std::size_t rank(RatMatrix a);

RatMatrix transpose(const RatMatrix& a);

RatVec multiply(const RatMatrix& a, const RatVec& x);

}  // namespace newtonkit::linalg
