#include "padicmech/analysis/pathology.hpp"

#include <algorithm>

namespace padicmech::analysis {

PadicInt pathological_eval(const PadicInt& x) {
  std::vector<PadicInt::Digit> digits(static_cast<std::size_t>(2 * x.precision()), 0);
  for (int j = 0; j < x.precision(); ++j) digits[static_cast<std::size_t>(2 * j)] = x.digit(j);
  return PadicInt::from_digits(x.prime(), std::move(digits));
}

SupNormProbe sup_norm_probe(const Series& f, int depth, std::uint64_t cap) {
  if (!f.is_exact()) throw InvalidArgument("sup_norm_probe needs a polynomial");
  if (depth < 1) throw InvalidArgument("probe depth must be >= 1");
  const std::uint32_t p = f.prime();
  const BigInt count = ipow(BigInt(p), static_cast<unsigned>(depth));
  if (count > cap) {
    throw InvalidArgument("p^depth = " + to_string(count) + " residues exceeds the probe cap " +
                          std::to_string(cap));
  }
  const int precision = std::max(f.precision(), depth + 1);
  bool integral = true;
  for (const auto& c : f.coeffs()) integral &= c.is_exact_zero() || c.order() >= 0;

  const Rational floor_norm = rpow(Rational(p), -depth);
  Rational lower = 0;
  Rational upper = floor_norm;
  const auto n = count.convert_to<std::uint64_t>();
  for (std::uint64_t r = 0; r < n; ++r) {
    const PadicNumber x = PadicNumber::from_integer(BigInt(r), p, precision);
    const PadicNumber y = f.evaluate(x).value;
    if (y.is_exact_zero()) continue;
    if (!y.is_zero()) {
      const Rational norm = y.norm().value();
      lower = std::max(lower, norm);
      upper = std::max(upper, norm);
    } else {
      upper = std::max(upper, rpow(Rational(p), -y.order()));
    }
  }
  SupNormProbe out{lower, std::nullopt, false, n};
  if (integral) {
    out.upper = upper;
    out.exact = upper == lower;
  }
  return out;
}

}  // namespace padicmech::analysis
