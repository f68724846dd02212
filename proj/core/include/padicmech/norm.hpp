#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "padicmech/numeric.hpp"

namespace padicmech {

/// A p-adic absolute value: either 0 or p^(-v) for an integer v. Kept as the
/// exponent so that comparisons and products are exact.
class Norm {
 public:
  static Norm zero(std::uint32_t prime) { return Norm(prime, std::nullopt); }
  static Norm of_valuation(std::uint32_t prime, int valuation) { return Norm(prime, valuation); }

  std::uint32_t prime() const noexcept { return prime_; }
  bool is_zero() const noexcept { return !valuation_.has_value(); }
  /// v with |x|_p = p^(-v). Throws for the zero norm.
  int valuation() const;

  Rational value() const;
  std::string to_string() const;

  Norm operator*(const Norm& other) const;
  Norm pow(int exponent) const;

  friend bool operator==(const Norm& a, const Norm& b) = default;
  friend std::strong_ordering operator<=>(const Norm& a, const Norm& b);

 private:
  Norm(std::uint32_t prime, std::optional<int> valuation) : prime_(prime), valuation_(valuation) {}

  std::uint32_t prime_;
  std::optional<int> valuation_;
};

}  // namespace padicmech
