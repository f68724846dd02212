#pragma once

#include <cstdint>
#include <string>

#include "padicmech/norm.hpp"
#include "padicmech/padic_number.hpp"

namespace padicmech::quantum {

/// Throws ExtensionUndefined unless p = 3 (mod 4), the condition for -1 to be
/// a non-square so that Q_p(i) is a field.
void require_extension(std::uint32_t prime);

/// a + ib in Q_p(i). Norm is max(|a|_p, |b|_p), which is the unique extension
/// of |.|_p because the extension is unramified.
class PadicComplex {
 public:
  /// The real number a (b = 0).
  PadicComplex(const PadicNumber& re);  // NOLINT(google-explicit-constructor): Q_p embeds in Q_p(i)
  PadicComplex(PadicNumber re, PadicNumber im);

  static PadicComplex i(std::uint32_t prime, int precision);

  const PadicNumber& re() const noexcept { return re_; }
  const PadicNumber& im() const noexcept { return im_; }
  std::uint32_t prime() const noexcept { return re_.prime(); }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_exact_zero() const noexcept { return re_.is_exact_zero() && im_.is_exact_zero(); }
  int order() const noexcept;
  int absolute_precision() const noexcept;
  PadicComplex with_absolute_cap(int n) const;
  Norm norm() const;

  PadicComplex conj() const { return {re_, -im_}; }
  /// z * conj(z) = a^2 + b^2.
  PadicNumber modulus_sq() const { return re_ * re_ + im_ * im_; }

  PadicComplex operator-() const { return {-re_, -im_}; }
  friend PadicComplex operator+(const PadicComplex& a, const PadicComplex& b);
  friend PadicComplex operator-(const PadicComplex& a, const PadicComplex& b);
  friend PadicComplex operator*(const PadicComplex& a, const PadicComplex& b);
  friend PadicComplex operator/(const PadicComplex& a, const PadicComplex& b);

  friend bool operator==(const PadicComplex&, const PadicComplex&) = default;

 private:
  PadicNumber re_;
  PadicNumber im_;
};

bool congruent(const PadicComplex& a, const PadicComplex& b);

/// Text form "(re|im)" with both parts in the Q_p text form.
std::string format(const PadicComplex& z);

/// Exact element g + if of Q(i); used for rational
/// amplitudes and exact probabilities.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational conj() const { return {re, -im}; }
  Rational modulus_sq() const { return re * re + im * im; }
  bool is_real() const { return im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

std::string to_string(const GaussianRational& z);
/// "a", "a+bi", "bi" with rational a, b.
GaussianRational parse_gaussian(const std::string& text);

PadicComplex to_padic(const GaussianRational& z, std::uint32_t prime, int precision);

}  // namespace padicmech::quantum
