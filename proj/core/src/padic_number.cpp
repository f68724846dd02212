#include "padicmech/padic_number.hpp"

#include <algorithm>
#include <string>

#include "padicmech/errors.hpp"

namespace padicmech {
namespace {

int saturating_add(int a, int b) {
  if (a == PadicNumber::kExact || b == PadicNumber::kExact) return PadicNumber::kExact;
  return a + b;
}

void check_same_prime(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime() != b.prime()) {
    throw PrimeMismatch("Q_" + std::to_string(a.prime()) + " vs Q_" +
                        std::to_string(b.prime()));
  }
}

// x / p^base mod p^n as a PadicInt of n digits. Requires
// absolute_precision(x) >= base + n and order(x) >= base.
PadicInt window(const PadicNumber& x, int base, int n) {
  if (x.is_zero()) return PadicInt(x.prime(), n);
  const int shift = x.valuation() - base;
  if (shift >= n) return PadicInt(x.prime(), n);
  PadicInt unit = x.unit().truncated(n - shift);
  std::vector<PadicInt::Digit> digits(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < unit.precision(); ++i) {
    digits[static_cast<std::size_t>(i + shift)] = unit.digit(i);
  }
  return PadicInt::from_digits(x.prime(), std::move(digits));
}

PadicNumber normalize(std::uint32_t prime, int base, const PadicInt& digits) {
  const auto t = digits.valuation();
  if (!t) return PadicNumber::zero_mod(prime, base + digits.precision());
  return PadicNumber::from_unit(base + *t, digits.shifted_down(*t));
}

}  // namespace

PadicNumber PadicNumber::zero(std::uint32_t prime) {
  require_prime(prime);
  return PadicNumber(prime, kExact, std::nullopt);
}

PadicNumber PadicNumber::zero_mod(std::uint32_t prime, int absolute_precision) {
  require_prime(prime);
  return PadicNumber(prime, absolute_precision, std::nullopt);
}

PadicNumber PadicNumber::from_unit(int valuation, PadicInt unit) {
  if (!unit.is_unit()) throw InvalidArgument("unit part must have a nonzero leading digit");
  const auto p = unit.prime();
  return PadicNumber(p, valuation, std::move(unit));
}

PadicNumber PadicNumber::from_padic_int(const PadicInt& x) {
  return normalize(x.prime(), 0, x);
}

PadicNumber PadicNumber::from_integer(const BigInt& value, std::uint32_t prime, int precision) {
  return from_rational(Rational(value), prime, precision);
}

PadicNumber PadicNumber::from_rational(const Rational& value, std::uint32_t prime, int precision) {
  require_prime(prime);
  if (value == 0) return zero(prime);
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const int vn = valuation_of(num, prime);
  const int vd = valuation_of(den, prime);
  const BigInt pn = ipow(BigInt(prime), static_cast<unsigned>(vn));
  const BigInt pd = ipow(BigInt(prime), static_cast<unsigned>(vd));
  const Rational unit_value(BigInt(num / pn), BigInt(den / pd));
  return from_unit(vn - vd, PadicInt::from_rational(unit_value, prime, precision));
}

int PadicNumber::valuation() const {
  if (is_zero()) throw InvalidArgument("valuation of zero is undefined");
  return valuation_;
}

int PadicNumber::absolute_precision() const noexcept {
  return unit_ ? valuation_ + unit_->precision() : valuation_;
}

const PadicInt& PadicNumber::unit() const {
  if (!unit_) throw InvalidArgument("zero has no unit part");
  return *unit_;
}

Norm PadicNumber::norm() const {
  return unit_ ? Norm::of_valuation(prime_, valuation_) : Norm::zero(prime_);
}

PadicInt PadicNumber::to_padic_int(int precision) const {
  if (order() < 0) {
    throw InvalidArgument("value with valuation " + std::to_string(order()) + " is not in Z_p");
  }
  if (absolute_precision() < precision) {
    throw PrecisionError("only " + std::to_string(absolute_precision()) +
                         " digits are known, " + std::to_string(precision) + " requested");
  }
  return window(*this, 0, precision);
}

BigInt PadicNumber::residue(int modulus_exponent) const {
  return to_padic_int(modulus_exponent).residue();
}

PadicNumber PadicNumber::with_absolute_cap(int absolute_precision) const {
  if (absolute_precision == kExact) return *this;
  if (is_zero()) return PadicNumber(prime_, std::min(valuation_, absolute_precision), std::nullopt);
  if (absolute_precision <= valuation_) return zero_mod(prime_, absolute_precision);
  const int keep = absolute_precision - valuation_;
  if (keep >= unit_->precision()) return *this;
  return PadicNumber(prime_, valuation_, unit_->truncated(keep));
}

PadicNumber PadicNumber::with_relative_cap(int relative_precision) const {
  if (is_zero() || relative_precision >= unit_->precision()) return *this;
  return PadicNumber(prime_, valuation_, unit_->truncated(relative_precision));
}

PadicNumber PadicNumber::pow(unsigned exponent) const {
  if (exponent == 0) {
    return from_integer(1, prime_, is_zero() ? kDefaultPrecision : relative_precision());
  }
  PadicNumber result = *this;
  for (unsigned k = 1; k < exponent; ++k) result = result * *this;
  return result;
}

PadicNumber PadicNumber::operator-() const {
  if (is_zero()) return *this;
  return PadicNumber(prime_, valuation_, -*unit_);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  if (a.is_zero()) return b.with_absolute_cap(a.order());
  if (b.is_zero()) return a.with_absolute_cap(b.order());
  const int base = std::min(a.valuation_, b.valuation_);
  const int top = std::min(a.absolute_precision(), b.absolute_precision());
  const int n = top - base;
  return normalize(a.prime_, base, window(a, base, n) + window(b, base, n));
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  if (a.is_zero() || b.is_zero()) {
    if (a.is_exact_zero() || b.is_exact_zero()) return PadicNumber::zero(a.prime_);
    return PadicNumber(a.prime_, saturating_add(a.order(), b.order()), std::nullopt);
  }
  return PadicNumber(a.prime_, a.valuation_ + b.valuation_, *a.unit_ * *b.unit_);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  if (b.is_zero()) throw DivisionByZero("division by a p-adic zero");
  if (a.is_zero()) {
    if (a.is_exact_zero()) return a;
    return PadicNumber(a.prime_, a.order() - b.valuation_, std::nullopt);
  }
  return PadicNumber(a.prime_, a.valuation_ - b.valuation_, *a.unit_ / *b.unit_);
}

bool congruent(const PadicNumber& a, const PadicNumber& b) { return (a - b).is_zero(); }

Norm metric(const PadicNumber& x, const PadicNumber& y) { return (x - y).norm(); }

PadicNumber arith(ArithOp op, const PadicNumber& x, const PadicNumber& y) {
  switch (op) {
    case ArithOp::Add:
      return x + y;
    case ArithOp::Sub:
      return x - y;
    case ArithOp::Mul:
      return x * y;
    case ArithOp::Div:
      return x / y;
  }
  throw InvalidArgument("unknown arithmetic operation");
}

}  // namespace padicmech
