#include "padicmech/ball.hpp"

#include <algorithm>
#include <string>

#include "padicmech/errors.hpp"

namespace padicmech {
namespace {

bool agree(const PadicInt& a, const PadicInt& b, int digits) {
  for (int i = 0; i < digits; ++i) {
    if (a.digit(i) != b.digit(i)) return false;
  }
  return true;
}

}  // namespace

Ball::Ball(PadicInt center, int radius_exponent) : center_(std::move(center)), k_(radius_exponent) {
  if (k_ < 0) throw InvalidArgument("ball radius must be p^(-k) with k >= 0");
  if (k_ > center_.precision()) {
    throw PrecisionError("radius p^-" + std::to_string(k_) + " is finer than the " +
                         std::to_string(center_.precision()) + " digits of the center");
  }
}

Rational Ball::radius() const { return rpow(Rational(prime()), -k_); }

bool Ball::contains(const PadicInt& x) const {
  if (x.prime() != prime()) throw PrimeMismatch("ball and point use different primes");
  if (x.precision() < k_) throw PrecisionError("point carries too few digits for this ball");
  return agree(center_, x, k_);
}

bool Ball::on_sphere(const PadicInt& x) const {
  if (!contains(x)) return false;
  if (k_ >= std::min(center_.precision(), x.precision())) {
    throw PrecisionError("sphere membership needs digit k of both center and point");
  }
  return center_.digit(k_) != x.digit(k_);
}

const char* to_string(BallRelation relation) {
  switch (relation) {
    case BallRelation::Disjoint:
      return "disjoint";
    case BallRelation::FirstInSecond:
      return "b1_in_b2";
    case BallRelation::SecondInFirst:
      return "b2_in_b1";
    case BallRelation::Equal:
      return "equal";
  }
  return "?";
}

BallRelation ball_relation(const Ball& b1, const Ball& b2) {
  if (b1.prime() != b2.prime()) throw PrimeMismatch("balls use different primes");
  const int k = std::min(b1.radius_exponent(), b2.radius_exponent());
  if (!agree(b1.center(), b2.center(), k)) return BallRelation::Disjoint;
  if (b1.radius_exponent() == b2.radius_exponent()) return BallRelation::Equal;
  return b1.radius_exponent() > b2.radius_exponent() ? BallRelation::FirstInSecond
                                                     : BallRelation::SecondInFirst;
}

}  // namespace padicmech
