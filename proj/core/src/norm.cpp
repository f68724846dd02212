#include "padicmech/norm.hpp"

#include "padicmech/errors.hpp"

namespace padicmech {

int Norm::valuation() const {
  if (!valuation_) throw InvalidArgument("the zero norm has no finite valuation");
  return *valuation_;
}

Rational Norm::value() const {
  if (!valuation_) return 0;
  return rpow(Rational(prime_), -*valuation_);
}

std::string Norm::to_string() const { return padicmech::to_string(value()); }

Norm Norm::operator*(const Norm& other) const {
  if (prime_ != other.prime_) throw PrimeMismatch("norms over different primes");
  if (!valuation_ || !other.valuation_) return zero(prime_);
  return of_valuation(prime_, *valuation_ + *other.valuation_);
}

Norm Norm::pow(int exponent) const {
  if (exponent < 0) throw InvalidArgument("negative norm power");
  if (exponent == 0) return of_valuation(prime_, 0);
  if (!valuation_) return *this;
  return of_valuation(prime_, *valuation_ * exponent);
}

std::strong_ordering operator<=>(const Norm& a, const Norm& b) {
  if (a.prime_ != b.prime_) throw PrimeMismatch("comparing norms over different primes");
  if (!a.valuation_ || !b.valuation_) {
    return static_cast<int>(a.valuation_.has_value()) <=> static_cast<int>(b.valuation_.has_value());
  }
  // Larger valuation means smaller norm.
  return *b.valuation_ <=> *a.valuation_;
}

}  // namespace padicmech
