#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "padicmech/numeric.hpp"

namespace padicmech {

struct MonnaImage {
  Rational exact;        ///< sum_{l<K} a_l / k^(l+1)
  double value;          ///< `exact` rounded to double
  Rational error_bound;  ///< sum_{l>=K} (k-1)/k^(l+1) = k^(-K)
};

/// Sends the base-m digit string a_0 a_1 ... into [0, 1] by reading the same
/// digits in base k >= m. The tail beyond the K known digits is bounded, not
/// guessed.
MonnaImage monna_embed(std::span<const std::uint32_t> digits, std::uint32_t m, std::uint32_t k);

struct ArchimedeanExpansion {
  BigInt integer_part;
  std::vector<std::uint32_t> digits;  ///< digits after the point, most significant first

  /// integer_part + sum_j digits[j] / m^(j+1).
  Rational partial_sum(std::uint32_t m) const;
};

/// Measurement expansion of a positive rational: the integer part, then
/// repeated floor(m * fractional part).
ArchimedeanExpansion archimedean_expand(const Rational& x, std::uint32_t m, int steps);

}  // namespace padicmech
