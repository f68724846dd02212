#include "padicmech/valuation.hpp"

#include "padicmech/errors.hpp"

namespace padicmech {

ValuationResult valuation(const BigInt& numerator, const BigInt& denominator, std::uint32_t prime) {
  require_prime(prime);
  if (denominator == 0) throw DivisionByZero("zero denominator");
  if (numerator == 0) return {std::nullopt, Rational(0)};
  const int v = valuation_of(numerator, prime) - valuation_of(denominator, prime);
  return {v, rpow(Rational(prime), -v)};
}

ValuationResult valuation(const Rational& value, std::uint32_t prime) {
  return valuation(boost::multiprecision::numerator(value), boost::multiprecision::denominator(value),
                   prime);
}

}  // namespace padicmech
