#pragma once

#include <cstdint>
#include <optional>

#include "padicmech/numeric.hpp"

namespace padicmech {

struct ValuationResult {
  std::optional<int> valuation;  ///< empty for 0
  Rational norm;                 ///< p^(-v), or 0
};

/// v_p(n/m) and |n/m|_p computed from the integer factorizations of n and m.
ValuationResult valuation(const BigInt& numerator, const BigInt& denominator, std::uint32_t prime);
ValuationResult valuation(const Rational& value, std::uint32_t prime);

}  // namespace padicmech
