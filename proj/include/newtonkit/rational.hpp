#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace newtonkit {

/// Exact rational scalar. All core arithmetic goes through this type.
using Rational = mpq_class;

/// Exact rational vector in an ambient (co)character space.
using RatVec = std::vector<Rational>;

/// Row-major dense matrix of rationals.
using RatMatrix = std::vector<RatVec>;

/// Raised for violations of a mathematical precondition (bad rank, non-dominant
/// input, out-of-range index...). The CLI maps this to exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical "p/q" form with q > 0 and gcd(p, q) = 1. Integers keep the "/1".
std::string to_string(const Rational& r);

/// Accepts "p/q" or "p" (optionally signed). Throws DomainError on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a comma-separated list of rationals, e.g. "1/2,0,-1/4".
RatVec parse_rational_list(std::string_view text);

std::string to_string(std::span<const Rational> v);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

mpz_class floor(const Rational& r);
mpz_class ceil(const Rational& r);

// Vector helpers. Dimension mismatches throw DomainError.
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RatVec add(std::span<const Rational> a, std::span<const Rational> b);
RatVec sub(std::span<const Rational> a, std::span<const Rational> b);
RatVec scale(const Rational& k, std::span<const Rational> v);
void axpy(const Rational& k, std::span<const Rational> x, RatVec& y);
bool is_zero(std::span<const Rational> v);
RatVec zeros(std::size_t n);

/// Lexicographic comparison, used for deterministic output ordering.
std::strong_ordering lex_compare(std::span<const Rational> a, std::span<const Rational> b);

struct LexLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return lex_compare(a, b) < 0; }
};

}  // namespace newtonkit
