#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "padicmech/numeric.hpp"

namespace padicmech {

/// An element of Z_p known to K digits: x = a_0 + a_1 p + ... + a_{K-1} p^{K-1}
/// (mod p^K). Digits are stored little-endian and all arithmetic is done on
/// the digit vector directly, with carries in base p.
///
/// Binary operations take the smaller of the two precisions. Equality is
/// representational: same prime, same precision, same digits.
class PadicInt {
 public:
  using Digit = std::uint32_t;

  /// Zero with `precision` digits.
  PadicInt(std::uint32_t prime, int precision);

  static PadicInt from_digits(std::uint32_t prime, std::vector<Digit> digits);
  static PadicInt from_integer(const BigInt& value, std::uint32_t prime, int precision);
  /// Requires the denominator to be prime to p.
  static PadicInt from_rational(const Rational& value, std::uint32_t prime, int precision);

  std::uint32_t prime() const noexcept { return prime_; }
  int precision() const noexcept { return static_cast<int>(digits_.size()); }
  std::span<const Digit> digits() const noexcept { return digits_; }
  Digit digit(int index) const { return digits_.at(static_cast<std::size_t>(index)); }

  bool is_zero() const noexcept;
  bool is_unit() const noexcept { return digits_.front() != 0; }
  /// Index of the first nonzero digit; empty when every known digit is zero.
  std::optional<int> valuation() const noexcept;

  /// Residue in [0, p^K).
  BigInt residue() const;
  BigInt modulus() const;

  PadicInt truncated(int precision) const;
  /// Multiply by p^k, keeping the precision (the top k digits fall off).
  PadicInt shifted_up(int k) const;
  /// Divide by p^k; the low k digits must be zero. Precision drops by k.
  PadicInt shifted_down(int k) const;
  /// Multiplicative inverse of a unit. Throws DivisionByZero otherwise.
  PadicInt inverse() const;

  PadicInt operator-() const;
  friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
  /// Division by a unit (digit-by-digit long division from the low end).
  friend PadicInt operator/(const PadicInt& a, const PadicInt& b);

  friend bool operator==(const PadicInt& a, const PadicInt& b) = default;

 private:
  PadicInt(std::uint32_t prime, std::vector<Digit> digits, bool /*trusted*/)
      : prime_(prime), digits_(std::move(digits)) {}

  std::uint32_t prime_;
  std::vector<Digit> digits_;
};

/// Inverse of a nonzero residue mod p.
std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p);

}  // namespace padicmech
