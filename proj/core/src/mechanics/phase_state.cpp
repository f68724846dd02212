#include "padicmech/mechanics/phase_state.hpp"

#include "padicmech/errors.hpp"

namespace padicmech::mechanics {

bool PhaseState::is_integral() const {
  if (!t.is_integral()) return false;
  for (const auto& x : q) {
    if (!x.is_integral()) return false;
  }
  for (const auto& x : p) {
    if (!x.is_integral()) return false;
  }
  return true;
}

void PhaseState::validate() const {
  if (q.empty()) throw DimensionMismatch("a phase state needs N >= 1");
  if (q.size() != p.size()) throw DimensionMismatch("q and p have different lengths");
  for (const auto& x : q) {
    if (x.prime() != prime()) throw PrimeMismatch("phase state mixes primes");
  }
  for (const auto& x : p) {
    if (x.prime() != prime()) throw PrimeMismatch("phase state mixes primes");
  }
}

PhaseState PhaseState::from_rationals(std::uint32_t prime, int precision, const std::vector<Rational>& q,
                                      const std::vector<Rational>& p, const Rational& t) {
  PhaseState z{{}, {}, PadicNumber::from_rational(t, prime, precision)};
  for (const auto& x : q) z.q.push_back(PadicNumber::from_rational(x, prime, precision));
  for (const auto& x : p) z.p.push_back(PadicNumber::from_rational(x, prime, precision));
  z.validate();
  return z;
}

}  // namespace padicmech::mechanics
