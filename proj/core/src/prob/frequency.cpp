#include "padicmech/prob/frequency.hpp"

#include "padicmech/errors.hpp"

namespace padicmech::prob {

Rational FrequencyRecord::frequency(std::size_t j) const { return Rational(successes.at(j), trials.at(j)); }

void FrequencyRecord::validate() const {
  if (trials.size() != successes.size()) throw InvalidArgument("one success count per checkpoint");
  for (std::size_t j = 0; j < trials.size(); ++j) {
    if (trials[j] < 1) throw InvalidArgument("checkpoint trial counts must be positive");
    if (successes[j] < 0 || successes[j] > trials[j]) throw InvalidArgument("need 0 <= n_j <= N_j");
    if (j > 0 && trials[j] <= trials[j - 1]) throw InvalidArgument("checkpoints must increase");
    if (j > 0 && successes[j] < successes[j - 1]) throw InvalidArgument("success counts cannot decrease");
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Converges:
      return "converges";
    case Verdict::ConvergesToZero:
      return "converges_to_zero";
    case Verdict::Fluctuating:
      return "fluctuating";
    case Verdict::InsufficientEvidence:
      return "insufficient_evidence";
  }
  return "?";
}

namespace {

// Indices of the window entries compared against the last checkpoint.
std::pair<std::size_t, std::size_t> window_range(const FrequencyRecord& record, int window) {
  record.validate();
  if (window < 1) throw InvalidArgument("window must be >= 1");
  if (static_cast<std::size_t>(window) > record.size()) {
    throw InvalidArgument("window " + std::to_string(window) + " exceeds the " + std::to_string(record.size()) +
                          " checkpoints");
  }
  return {record.size() - static_cast<std::size_t>(window), record.size() - 1};
}

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace

StabilizationReport stabilization_detect(const FrequencyRecord& record, const RealTopology& topology) {
  if (topology.epsilon <= 0) throw InvalidArgument("epsilon must be positive");
  const auto [first, last] = window_range(record, topology.window);
  StabilizationReport out{"real", topology.window, Verdict::InsufficientEvidence, std::nullopt, std::nullopt, {}};
  if (topology.window < 2) return out;
  const Rational nu_last = record.frequency(last);
  bool stable = true;
  for (std::size_t i = first; i < last; ++i) {
    out.evidence.push_back(abs(record.frequency(i) - nu_last));
    stable &= out.evidence.back() < topology.epsilon;
  }
  if (!stable) {
    out.verdict = Verdict::Fluctuating;
    return out;
  }
  out.candidate = nu_last;
  out.verdict = nu_last < topology.epsilon ? Verdict::ConvergesToZero : Verdict::Converges;
  return out;
}

StabilizationReport stabilization_detect(const FrequencyRecord& record, const PadicTopology& topology) {
  require_prime(topology.prime);
  if (topology.strength < 1) throw InvalidArgument("strength s must be >= 1");
  const auto [first, last] = window_range(record, topology.window);
  StabilizationReport out{"padic", topology.window, Verdict::InsufficientEvidence, std::nullopt, std::nullopt, {}};
  if (topology.window < 2) return out;
  const Rational nu_last = record.frequency(last);
  const Rational bound = rpow(Rational(topology.prime), -topology.strength);
  bool stable = true;
  for (std::size_t i = first; i < last; ++i) {
    const Rational d = record.frequency(i) - nu_last;
    const Rational norm = d == 0 ? Rational(0) : PadicNumber::from_rational(d, topology.prime, 1).norm().value();
    out.evidence.push_back(norm);
    stable &= norm <= bound;
  }
  if (!stable) {
    out.verdict = Verdict::Fluctuating;
    return out;
  }
  out.candidate = nu_last;
  const PadicNumber x =
      PadicNumber::from_rational(nu_last, topology.prime, topology.strength + 1).with_absolute_cap(topology.strength);
  out.padic_candidate = x;
  out.verdict = x.is_zero() ? Verdict::ConvergesToZero : Verdict::Converges;
  return out;
}

DualLimitRecord dual_limit_synthesize(std::uint32_t prime, const Rational& alpha, int length) {
  require_prime(prime);
  if (length < 1) throw InvalidArgument("need at least one checkpoint");
  if (alpha != 0 && PadicNumber::from_rational(alpha, prime, 1).valuation() < 0) {
    throw InvalidArgument("alpha = " + padicmech::to_string(alpha) + " has |alpha|_p > 1; no counts n_j in Z reach it");
  }
  DualLimitRecord out{{}, Rational(0), alpha, alpha >= 0 && alpha <= 1};
  for (int j = 1; j <= length; ++j) {
    const BigInt pj = ipow(BigInt(prime), static_cast<unsigned>(j));
    const BigInt n = alpha == 0 ? BigInt(0) : PadicNumber::from_rational(alpha, prime, j).residue(j);
    out.record.trials.push_back(1 + pj * pj);
    out.record.successes.push_back(n);
  }
  out.record.validate();
  return out;
}

Rational ball_volume(std::uint32_t prime, int k) {
  require_prime(prime);
  if (k < 0) throw InvalidArgument("a ball in Z_p has radius p^-k with k >= 0");
  return rpow(Rational(prime), -k);
}

}  // namespace padicmech::prob
