#include "padicmech/mechanics/restriction.hpp"

#include "padicmech/analysis/elementary.hpp"
#include "padicmech/errors.hpp"

namespace padicmech::mechanics {

RestrictionReport restriction_check(const PadicNumber& q, const PadicNumber& p, const PadicNumber& m,
                                    const PadicNumber& beta) {
  if (m.is_zero() || beta.is_zero()) throw InvalidArgument("restriction relation needs nonzero m and beta");
  const std::uint32_t prime = beta.prime();
  for (const auto* x : {&q, &p, &m}) {
    if (x->prime() != prime) throw PrimeMismatch("restriction arguments mix primes");
  }
  const Rational rp = rpow(Rational(prime), -analysis::convergence_valuation(prime));
  const Rational lhs = q.norm().value() * p.norm().value();
  const Rational rhs = (m * beta).norm().value() * rp;
  return {lhs <= rhs, lhs / rhs, lhs, rhs};
}

}  // namespace padicmech::mechanics
