#pragma once

#include "padicmech/padic_int.hpp"

namespace padicmech {

/// The clopen ball U_r(a) = {x in Z_p : |x - a|_p <= r} with r = p^(-k), k >= 0.
/// Membership only looks at the first k digits, so any member is a center.
class Ball {
 public:
  /// Throws PrecisionError when k exceeds the digits carried by the center.
  Ball(PadicInt center, int radius_exponent);

  const PadicInt& center() const noexcept { return center_; }
  std::uint32_t prime() const noexcept { return center_.prime(); }
  /// k in r = p^(-k).
  int radius_exponent() const noexcept { return k_; }
  Rational radius() const;

  bool contains(const PadicInt& x) const;
  /// Membership in the sphere S_r(a) = {|x - a|_p = r}: digits 0..k-1 agree
  /// with the center and digit k differs.
  bool on_sphere(const PadicInt& x) const;

 private:
  PadicInt center_;
  int k_;
};

enum class BallRelation { Disjoint, FirstInSecond, SecondInFirst, Equal };

const char* to_string(BallRelation relation);

/// Two ultrametric balls are either disjoint or nested; there is no partial overlap.
BallRelation ball_relation(const Ball& b1, const Ball& b2);

}  // namespace padicmech
