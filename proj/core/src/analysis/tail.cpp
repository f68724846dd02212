#include "padicmech/analysis/tail.hpp"

#include <algorithm>

#include "padicmech/errors.hpp"

namespace padicmech::analysis {

std::optional<Rational> Radius::value(std::uint32_t prime) const {
  if (!min_valuation) return std::nullopt;
  return rpow(Rational(prime), -*min_valuation);
}

std::string Radius::describe(std::uint32_t prime) const {
  if (!min_valuation) return "entire";
  return "|x|_" + std::to_string(prime) + " <= " + to_string(*value(prime));
}

Radius intersect(const Radius& a, const Radius& b) {
  if (!a.min_valuation) return b;
  if (!b.min_valuation) return a;
  return Radius::at_least(std::max(*a.min_valuation, *b.min_valuation));
}

std::string describe(const Tail& tail) {
  if (std::holds_alternative<ExactTail>(tail)) return "exact";
  if (std::holds_alternative<UnknownTail>(tail)) return "unknown";
  const auto& b = std::get<BoundedTail>(tail);
  return "v(c_n) >= -(" + to_string(b.slope) + ")n - (" + to_string(b.offset) + ") - (" +
         to_string(b.log_weight) + ")log_p(n+1)";
}

BigInt floor_of(const Rational& r) {
  const BigInt& n = boost::multiprecision::numerator(r);
  const BigInt& d = boost::multiprecision::denominator(r);
  BigInt q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

std::optional<Rational> tail_minimum(const BoundedTail& bound, int w, long long n0, std::uint32_t prime) {
  const Rational gap = Rational(w) - bound.slope;
  if (gap <= 0) return std::nullopt;
  if (n0 < 0) n0 = 0;
  auto at = [&](const BigInt& n, int j) {
    return Rational(n) * gap - bound.offset - bound.log_weight * j;
  };
  // Within a block p^j - 1 <= n <= p^(j+1) - 2 the log term is constant and
  // the expression increases with n, so only the first index of each block matters.
  int j = floor_log(BigInt(n0 + 1), prime);
  Rational best = at(BigInt(n0), j);
  if (bound.log_weight <= 0) return best;
  BigInt start = ipow(BigInt(prime), static_cast<unsigned>(j + 1)) - 1;
  for (int guard = 0; guard < 4096; ++guard) {
    ++j;
    const Rational candidate = at(start, j);
    best = std::min(best, candidate);
    const BigInt next = start * prime + (prime - 1);
    // Block starts grow geometrically; once the step is positive it stays positive.
    if (Rational(next - start) * gap > bound.log_weight && candidate >= best) break;
    start = next;
  }
  return best;
}

BoundedTail tail_add(const BoundedTail& a, const BoundedTail& b) {
  return {std::max(a.slope, b.slope), std::max(a.offset, b.offset), std::max(a.log_weight, b.log_weight)};
}

BoundedTail tail_mul(const BoundedTail& a, const BoundedTail& b) {
  return {std::max(a.slope, b.slope), a.offset + b.offset, a.log_weight + b.log_weight};
}

BoundedTail tail_derive(const BoundedTail& a) {
  return {a.slope, a.offset + a.slope + a.log_weight, a.log_weight};
}

BoundedTail tail_antiderivative(const BoundedTail& a) {
  return {a.slope, a.offset - a.slope, a.log_weight + 1};
}

}  // namespace padicmech::analysis
