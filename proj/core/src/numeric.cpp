#include "padicmech/numeric.hpp"

#include <cctype>
#include <string>

#include "padicmech/errors.hpp"

namespace padicmech {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw InvalidArgument("prime " + std::to_string(p) + " exceeds 2^31");
  }
  if (!is_prime(p)) {
    throw InvalidArgument(std::to_string(p) +
                          " is not prime (composite moduli have zero divisors)");
  }
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Rational rpow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero("0 raised to a negative power");
    return rpow(1 / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

int valuation_of(const BigInt& n, std::uint32_t p) {
  if (n == 0) throw InvalidArgument("valuation of zero is infinite");
  BigInt m = n;
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

int floor_log(const BigInt& n, std::uint32_t p) {
  if (n < 1) throw InvalidArgument("floor_log needs n >= 1");
  int k = 0;
  BigInt power = p;
  while (power <= n) {
    power *= p;
    ++k;
  }
  return k;
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("empty integer literal");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad integer literal '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace padicmech
