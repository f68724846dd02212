#include "padicmech/expansion.hpp"

#include "padicmech/errors.hpp"

namespace padicmech {
namespace {

BigInt floor_of(const Rational& x) {
  const BigInt& n = boost::multiprecision::numerator(x);
  const BigInt& d = boost::multiprecision::denominator(x);
  BigInt q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

}  // namespace

MonnaImage monna_embed(std::span<const std::uint32_t> digits, std::uint32_t m, std::uint32_t k) {
  if (m < 2) throw InvalidArgument("digit base must be at least 2");
  if (k < m) throw InvalidArgument("target base k must satisfy k >= m");
  Rational sum = 0;
  BigInt scale = 1;
  for (const auto a : digits) {
    if (a >= m) throw InvalidArgument("digit out of range for base " + std::to_string(m));
    scale *= k;
    sum += Rational(BigInt(a), scale);
  }
  return {sum, sum.convert_to<double>(), Rational(BigInt(1), scale)};
}

Rational ArchimedeanExpansion::partial_sum(std::uint32_t m) const {
  Rational sum = integer_part;
  BigInt scale = 1;
  for (const auto a : digits) {
    scale *= m;
    sum += Rational(BigInt(a), scale);
  }
  return sum;
}

ArchimedeanExpansion archimedean_expand(const Rational& x, std::uint32_t m, int steps) {
  if (x <= 0) throw InvalidArgument("measurement expansion needs x > 0");
  if (m < 2) throw InvalidArgument("expansion base must be at least 2");
  if (steps < 0) throw InvalidArgument("steps must be non-negative");
  ArchimedeanExpansion out;
  out.integer_part = floor_of(x);
  Rational rest = x - out.integer_part;
  for (int j = 0; j < steps; ++j) {
    rest *= m;
    const BigInt d = floor_of(rest);
    out.digits.push_back(d.convert_to<std::uint32_t>());
    rest -= d;
  }
  return out;
}

}  // namespace padicmech
