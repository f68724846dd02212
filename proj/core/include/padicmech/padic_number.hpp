#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "padicmech/norm.hpp"
#include "padicmech/numeric.hpp"
#include "padicmech/padic_int.hpp"

namespace padicmech {

/// An element of Q_p stored as p^v * u, where u is a PadicInt whose leading
/// digit is nonzero. The precision of u is the relative precision; v plus that
/// is the absolute precision, i.e. the value is known modulo p^(v+K).
///
/// Zero is a separate state that still carries an absolute precision: the
/// difference of two equal approximations is "0 mod p^N", not an exact zero.
/// `order()` is the certified lower bound on the valuation in both states.
///
/// Arithmetic never invents digits. Sums keep the smaller absolute precision
/// and renormalize when leading digits cancel, so cancellation shows up as a
/// shorter unit. Products and quotients keep the smaller relative precision.
class PadicNumber {
 public:
  /// Absolute precision of an exact zero.
  static constexpr int kExact = std::numeric_limits<int>::max();

  static PadicNumber zero(std::uint32_t prime);
  /// O(p^N): a zero known only modulo p^N.
  static PadicNumber zero_mod(std::uint32_t prime, int absolute_precision);
  /// p^valuation * unit; the unit's leading digit must be nonzero.
  static PadicNumber from_unit(int valuation, PadicInt unit);
  /// Embeds Z_p into Q_p (absolute precision = precision of x).
  static PadicNumber from_padic_int(const PadicInt& x);
  static PadicNumber from_integer(const BigInt& value, std::uint32_t prime, int precision);
  /// Exact rational rendered with `precision` relative digits. 0 maps to the exact zero.
  static PadicNumber from_rational(const Rational& value, std::uint32_t prime, int precision);

  std::uint32_t prime() const noexcept { return prime_; }
  bool is_zero() const noexcept { return !unit_.has_value(); }
  bool is_exact_zero() const noexcept { return is_zero() && valuation_ == kExact; }

  /// Valuation of a nonzero value; throws for zero.
  int valuation() const;
  /// Certified lower bound on the valuation (absolute precision for zero).
  int order() const noexcept { return valuation_; }
  int relative_precision() const noexcept { return unit_ ? unit_->precision() : 0; }
  int absolute_precision() const noexcept;
  const PadicInt& unit() const;
  Norm norm() const;
  bool is_integral() const noexcept { return order() >= 0; }

  /// Digits 0..K-1 of an integral value. Throws PrecisionError when fewer than
  /// K digits are known.
  PadicInt to_padic_int(int precision) const;
  /// x mod p^N for integral x.
  BigInt residue(int modulus_exponent) const;

  PadicNumber with_absolute_cap(int absolute_precision) const;
  PadicNumber with_relative_cap(int relative_precision) const;
  PadicNumber pow(unsigned exponent) const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);
  PadicNumber& operator+=(const PadicNumber& o) { return *this = *this + o; }
  PadicNumber& operator-=(const PadicNumber& o) { return *this = *this - o; }
  PadicNumber& operator*=(const PadicNumber& o) { return *this = *this * o; }

  /// Representational equality (same valuation, precision and digits).
  friend bool operator==(const PadicNumber& a, const PadicNumber& b) = default;

 private:
  PadicNumber(std::uint32_t prime, int valuation, std::optional<PadicInt> unit)
      : prime_(prime), valuation_(valuation), unit_(std::move(unit)) {}

  std::uint32_t prime_;
  int valuation_;
  std::optional<PadicInt> unit_;
};

/// True when a - b vanishes to the precision both sides carry.
bool congruent(const PadicNumber& a, const PadicNumber& b);

/// |x - y|_p.
Norm metric(const PadicNumber& x, const PadicNumber& y);

enum class ArithOp { Add, Sub, Mul, Div };
PadicNumber arith(ArithOp op, const PadicNumber& x, const PadicNumber& y);

}  // namespace padicmech
