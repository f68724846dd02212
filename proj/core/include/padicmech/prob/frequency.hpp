#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padicmech/padic_number.hpp"

namespace padicmech::prob {

/// Checkpoints N_1 < ... < N_J with success counts n_1 <= ... <= n_J, n_j <= N_j.
struct FrequencyRecord {
  std::vector<BigInt> trials;
  std::vector<BigInt> successes;

  std::size_t size() const { return trials.size(); }
  /// nu_j = n_j / N_j.
  Rational frequency(std::size_t j) const;
  /// Throws InvalidArgument when an invariant fails.
  void validate() const;
};

enum class Verdict { Converges, ConvergesToZero, Fluctuating, InsufficientEvidence };

const char* to_string(Verdict v);

struct RealTopology {
  Rational epsilon;
  int window;
};

struct PadicTopology {
  std::uint32_t prime;
  int strength;  ///< s: frequencies must agree modulo p^s
  int window;
};

/// Trailing-window Cauchy test: the last `window` frequencies are compared
/// with nu_J. The finite surrogate of a limit, since a limit itself is not
/// observable.
struct StabilizationReport {
  std::string mode;  ///< "real" or "padic"
  int window;
  Verdict verdict;
  /// nu_J when the test passes.
  std::optional<Rational> candidate;
  /// p-adic mode: the candidate known modulo p^s (its first s digits).
  std::optional<PadicNumber> padic_candidate;
  /// |nu_i - nu_J| (real) or |nu_i - nu_J|_p (p-adic) over the window.
  std::vector<Rational> evidence;
};

StabilizationReport stabilization_detect(const FrequencyRecord& record, const RealTopology& topology);
StabilizationReport stabilization_detect(const FrequencyRecord& record, const PadicTopology& topology);

struct DualLimitRecord {
  FrequencyRecord record;
  Rational real_limit;   ///< always 0
  Rational padic_limit;  ///< alpha
  /// alpha lies in [0, 1], so the p-adic limit also reads as an ordinary probability.
  bool real_interpretable;
};

/// n_j = (alpha mod p^j), N_j = 1 + p^(2j), j = 1..J. Then nu_j < p^(-j) -> 0
/// in R while n_j -> alpha and N_j -> 1 in Q_p. Guarantees hold at the
/// checkpoints only. Requires |alpha|_p <= 1 and J >= 1.
DualLimitRecord dual_limit_synthesize(std::uint32_t prime, const Rational& alpha, int length);

/// Measure of a ball of radius p^-k in Z_p under the uniform distribution.
Rational ball_volume(std::uint32_t prime, int k);

}  // namespace padicmech::prob
