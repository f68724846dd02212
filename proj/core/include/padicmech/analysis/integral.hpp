#pragma once

#include <algorithm>
#include <string>

#include "padicmech/analysis/power_series.hpp"

namespace padicmech::analysis {

template <SeriesScalar R>
struct IntegralResult {
  R value;
  /// Digits short of the requested absolute precision, mostly from the
  /// divisions c_n/(n+1) in the antiderivative.
  int precision_loss;
  bool certified;
};

/// Term-wise integral F(b) - F(a), F the antiderivative with F(0) = 0.
///
/// Each endpoint must lie where F provably converges: inside the radius and,
/// for a bounded tail, where the terms of F shrink. A series with no tail
/// certificate falls back to the conservative domain |x|_p <= r/p.
template <SeriesScalar R>
IntegralResult<R> definite_integral(const PowerSeries<R>& f, const R& a, const R& b, int target_precision) {
  const PowerSeries<R> F = f.antiderivative();
  auto check = [&](const R& x, const char* name) {
    F.check_domain(x);
    if (x.is_exact_zero()) return;
    if (const auto* t = std::get_if<BoundedTail>(&F.tail())) {
      if (!tail_minimum(*t, x.order(), F.degree() + 1, F.prime())) {
        throw DomainViolation("|x|_p <= delta/p", std::string("endpoint ") + name +
                                                      " lies where the integrated series need not converge");
      }
    } else if (std::holds_alternative<UnknownTail>(F.tail()) && F.radius().min_valuation &&
               x.order() < *F.radius().min_valuation + 1) {
      throw DomainViolation("|x|_p <= delta/p", std::string("endpoint ") + name + " lies outside the shrunken ball");
    }
  };
  check(a, "a");
  check(b, "b");
  // The integral over an empty path is exactly zero.
  if (a == b) return {R{PadicNumber::zero(f.prime())}, 0, true};
  const auto Fb = F.evaluate(b);
  const auto Fa = F.evaluate(a);
  R value = Fb.value - Fa.value;
  const int loss = std::max(0, target_precision - std::min(value.absolute_precision(), target_precision));
  return {value, loss, Fa.certified && Fb.certified};
}

}  // namespace padicmech::analysis
