#pragma once

#include <cstdint>
#include <optional>

#include "padicmech/analysis/power_series.hpp"
#include "padicmech/padic_int.hpp"

namespace padicmech::analysis {

/// f(sum a_j p^j) = sum a_j p^(2j). Then |f(x) - f(y)|_p = |x - y|_p^2, so f'
/// vanishes identically although f is injective. Output carries 2K digits.
PadicInt pathological_eval(const PadicInt& x);

struct SupNormProbe {
  /// max |f(x)|_p over the sampled residues: always a valid lower bound.
  Rational lower;
  /// Certified bound for sup over Z_p when the coefficients are integral:
  /// f(x + p^depth y) = f(x) mod p^depth.
  std::optional<Rational> upper;
  bool exact;
  std::uint64_t points;
};

inline constexpr std::uint64_t kDefaultProbeCap = 1'000'000;

/// Evaluates a polynomial at every residue 0..p^depth - 1.
SupNormProbe sup_norm_probe(const Series& f, int depth, std::uint64_t cap = kDefaultProbeCap);

}  // namespace padicmech::analysis
