#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "padicmech/numeric.hpp"

namespace padicmech::analysis {

/// Convergence domain {x : v_p(x) >= min_valuation}, i.e. |x|_p <= p^(-min_valuation).
/// An empty min_valuation means the series is a polynomial and converges everywhere.
struct Radius {
  std::optional<int> min_valuation;

  static Radius entire() { return {}; }
  static Radius at_least(int valuation) { return {valuation}; }

  bool contains_order(int order) const { return !min_valuation || order >= *min_valuation; }
  /// p^(-min_valuation); empty for an entire series.
  std::optional<Rational> value(std::uint32_t prime) const;
  std::string describe(std::uint32_t prime) const;

  friend bool operator==(const Radius&, const Radius&) = default;
};

/// The smaller of two domains.
Radius intersect(const Radius& a, const Radius& b);

// What is known about the coefficients c_n beyond those stored.

/// Every coefficient past the stored ones is exactly zero.
struct ExactTail {
  friend bool operator==(const ExactTail&, const ExactTail&) = default;
};

/// v(c_n) >= -slope*n - offset - log_weight*floor(log_p(n+1)) for every n,
/// stored or not. The log term absorbs the p-adic size of 1/(n+1) that
/// repeated antidifferentiation introduces.
struct BoundedTail {
  Rational slope;
  Rational offset;
  Rational log_weight;
  friend bool operator==(const BoundedTail&, const BoundedTail&) = default;
};

/// Nothing is certified about the unstored coefficients.
struct UnknownTail {
  friend bool operator==(const UnknownTail&, const UnknownTail&) = default;
};

using Tail = std::variant<ExactTail, BoundedTail, UnknownTail>;

std::string describe(const Tail& tail);

/// min over n >= n0 of n*(w - s) - o - L*floor(log_p(n+1)), which lower-bounds
/// v(c_n x^n) for v(x) = w. Empty when w <= s (the terms need not shrink).
std::optional<Rational> tail_minimum(const BoundedTail& bound, int w, long long n0, std::uint32_t prime);

BoundedTail tail_add(const BoundedTail& a, const BoundedTail& b);
BoundedTail tail_mul(const BoundedTail& a, const BoundedTail& b);
BoundedTail tail_derive(const BoundedTail& a);
BoundedTail tail_antiderivative(const BoundedTail& a);

/// Smallest integer >= r.
BigInt ceil_of(const Rational& r);
BigInt floor_of(const Rational& r);

}  // namespace padicmech::analysis
