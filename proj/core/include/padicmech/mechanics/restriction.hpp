#pragma once

#include "padicmech/padic_number.hpp"

namespace padicmech::mechanics {

struct RestrictionReport {
  bool satisfied;
  /// |q|_p |p|_p / (|m beta|_p r_p); the relation holds iff margin <= 1.
  Rational margin;
  Rational lhs;
  Rational rhs;
};

/// The restriction relation |q|_p |p|_p <= |m beta|_p r_p, evaluated on exact norms.
RestrictionReport restriction_check(const PadicNumber& q, const PadicNumber& p, const PadicNumber& m,
                                    const PadicNumber& beta);

}  // namespace padicmech::mechanics
