#include "padicmech/padic_int.hpp"

#include <algorithm>
#include <string>

#include "padicmech/errors.hpp"

namespace padicmech {
namespace {

void check_same_prime(const PadicInt& a, const PadicInt& b) {
  if (a.prime() != b.prime()) {
    throw PrimeMismatch("Z_" + std::to_string(a.prime()) + " vs Z_" +
                        std::to_string(b.prime()));
  }
}

void check_precision(int precision) {
  if (precision < 1) {
    throw InvalidArgument("precision must be >= 1, got " + std::to_string(precision));
  }
}

}  // namespace

std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw DivisionByZero("0 has no inverse mod " + std::to_string(p));
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint64_t e = p - 2;
  while (e != 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

PadicInt::PadicInt(std::uint32_t prime, int precision) : prime_(prime) {
  require_prime(prime);
  check_precision(precision);
  digits_.assign(static_cast<std::size_t>(precision), 0);
}

PadicInt PadicInt::from_digits(std::uint32_t prime, std::vector<Digit> digits) {
  require_prime(prime);
  check_precision(static_cast<int>(digits.size()));
  for (Digit d : digits) {
    if (d >= prime) {
      throw InvalidArgument("digit " + std::to_string(d) + " out of range for p=" +
                            std::to_string(prime));
    }
  }
  return PadicInt(prime, std::move(digits), true);
}

PadicInt PadicInt::from_integer(const BigInt& value, std::uint32_t prime, int precision) {
  require_prime(prime);
  check_precision(precision);
  BigInt r = mod_floor(value, ipow(BigInt(prime), static_cast<unsigned>(precision)));
  std::vector<Digit> digits(static_cast<std::size_t>(precision), 0);
  for (auto& d : digits) {
    d = static_cast<Digit>(r % prime);
    r /= prime;
  }
  return PadicInt(prime, std::move(digits), true);
}

PadicInt PadicInt::from_rational(const Rational& value, std::uint32_t prime, int precision) {
  const BigInt den = boost::multiprecision::denominator(value);
  if (den % prime == 0) {
    throw InvalidArgument("rational " + to_string(value) + " is not in Z_" +
                          std::to_string(prime));
  }
  const PadicInt num = from_integer(boost::multiprecision::numerator(value), prime, precision);
  return num / from_integer(den, prime, precision);
}

bool PadicInt::is_zero() const noexcept {
  return std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d == 0; });
}

std::optional<int> PadicInt::valuation() const noexcept {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] != 0) return static_cast<int>(i);
  }
  return std::nullopt;
}

BigInt PadicInt::residue() const {
  BigInt r = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) r = r * prime_ + *it;
  return r;
}

BigInt PadicInt::modulus() const {
  return ipow(BigInt(prime_), static_cast<unsigned>(digits_.size()));
}

PadicInt PadicInt::truncated(int precision) const {
  check_precision(precision);
  if (precision > this->precision()) {
    throw PrecisionError("cannot extend " + std::to_string(this->precision()) +
                         " known digits to " + std::to_string(precision));
  }
  return PadicInt(prime_, std::vector<Digit>(digits_.begin(), digits_.begin() + precision), true);
}

PadicInt PadicInt::shifted_up(int k) const {
  if (k < 0) throw InvalidArgument("negative shift");
  const auto n = digits_.size();
  std::vector<Digit> out(n, 0);
  for (std::size_t i = static_cast<std::size_t>(k); i < n; ++i) out[i] = digits_[i - k];
  return PadicInt(prime_, std::move(out), true);
}

PadicInt PadicInt::shifted_down(int k) const {
  if (k < 0) throw InvalidArgument("negative shift");
  if (k >= precision()) throw PrecisionError("shift consumes every known digit");
  for (int i = 0; i < k; ++i) {
    if (digits_[static_cast<std::size_t>(i)] != 0) {
      throw InvalidArgument("value is not divisible by p^" + std::to_string(k));
    }
  }
  return PadicInt(prime_, std::vector<Digit>(digits_.begin() + k, digits_.end()), true);
}

PadicInt PadicInt::operator-() const {
  std::vector<Digit> out(digits_.size());
  // -x = (complement of x) + 1
  std::uint64_t carry = 1;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    const std::uint64_t t = (prime_ - 1 - digits_[i]) + carry;
    out[i] = static_cast<Digit>(t % prime_);
    carry = t / prime_;
  }
  return PadicInt(prime_, std::move(out), true);
}

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
  check_same_prime(a, b);
  const auto n = static_cast<std::size_t>(std::min(a.precision(), b.precision()));
  const std::uint64_t p = a.prime_;
  std::vector<PadicInt::Digit> out(n);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t t = std::uint64_t{a.digits_[i]} + b.digits_[i] + carry;
    out[i] = static_cast<PadicInt::Digit>(t % p);
    carry = t / p;
  }
  return PadicInt(a.prime_, std::move(out), true);
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
  check_same_prime(a, b);
  const auto n = static_cast<std::size_t>(std::min(a.precision(), b.precision()));
  const std::int64_t p = a.prime_;
  std::vector<PadicInt::Digit> out(n);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t t = std::int64_t{a.digits_[i]} - b.digits_[i] - borrow;
    borrow = 0;
    if (t < 0) {
      t += p;
      borrow = 1;
    }
    out[i] = static_cast<PadicInt::Digit>(t);
  }
  return PadicInt(a.prime_, std::move(out), true);
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
  check_same_prime(a, b);
  const auto n = static_cast<std::size_t>(std::min(a.precision(), b.precision()));
  const std::uint64_t p = a.prime_;
  std::vector<std::uint64_t> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t ai = a.digits_[i];
    if (ai == 0) continue;
    std::uint64_t carry = 0;
    for (std::size_t j = 0; i + j < n; ++j) {
      const std::uint64_t t = acc[i + j] + ai * b.digits_[j] + carry;
      acc[i + j] = t % p;
      carry = t / p;
    }
  }
  std::vector<PadicInt::Digit> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<PadicInt::Digit>(acc[i]);
  return PadicInt(a.prime_, std::move(out), true);
}

PadicInt operator/(const PadicInt& a, const PadicInt& b) {
  check_same_prime(a, b);
  if (!b.is_unit()) {
    throw DivisionByZero("divisor is not a unit of Z_" + std::to_string(b.prime()));
  }
  const auto n = static_cast<std::size_t>(std::min(a.precision(), b.precision()));
  const std::int64_t p = a.prime_;
  const std::uint64_t inv0 = inverse_mod_prime(b.digits_[0], a.prime_);
  std::vector<std::int64_t> rem(a.digits_.begin(), a.digits_.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<PadicInt::Digit> quot(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto qi = static_cast<std::int64_t>(static_cast<std::uint64_t>(rem[i]) * inv0 % a.prime_);
    quot[i] = static_cast<PadicInt::Digit>(qi);
    if (qi == 0) continue;
    // rem -= qi * b * p^i, digits i..n-1, with borrows kept in [0, p).
    std::int64_t borrow = 0;
    for (std::size_t j = 0; i + j < n; ++j) {
      std::int64_t t = rem[i + j] - qi * static_cast<std::int64_t>(b.digits_[j]) - borrow;
      borrow = 0;
      if (t < 0) {
        borrow = (-t + p - 1) / p;
        t += borrow * p;
      }
      rem[i + j] = t;
    }
  }
  return PadicInt(a.prime_, std::move(quot), true);
}

PadicInt PadicInt::inverse() const {
  return PadicInt::from_integer(1, prime_, precision()) / *this;
}

}  // namespace padicmech
