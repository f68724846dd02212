#pragma once

#include <cstdint>
#include <vector>

#include "padicmech/padic_number.hpp"

namespace padicmech::mechanics {

/// A point z = (q, p) of the phase space together with the I-time t.
///
/// Components live in Q_p rather than Z_p: a mass with |m|_p < 1 makes the
/// velocity p/m leave Z_p, and the closed flows divide by such masses.
/// `is_integral()` reports whether the state is a point of Z_p^N x Z_p^N.
struct PhaseState {
  std::vector<PadicNumber> q;
  std::vector<PadicNumber> p;
  PadicNumber t;

  std::uint32_t prime() const { return t.prime(); }
  std::size_t dimension() const { return q.size(); }
  bool is_integral() const;
  /// Throws unless q and p have the same length N >= 1 over one prime.
  void validate() const;

  static PhaseState from_rationals(std::uint32_t prime, int precision, const std::vector<Rational>& q,
                                   const std::vector<Rational>& p, const Rational& t = 0);
};

}  // namespace padicmech::mechanics
