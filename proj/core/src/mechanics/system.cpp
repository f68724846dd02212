#include "padicmech/mechanics/system.hpp"

#include <algorithm>

namespace padicmech::mechanics {

SystemSummary system_reduce(const std::vector<PadicNumber>& masses, const PhaseState& z) {
  z.validate();
  if (masses.size() != z.dimension()) throw DimensionMismatch("one mass per transformer");
  PadicNumber M = PadicNumber::zero(z.prime());
  PadicNumber weighted = M;
  PadicNumber P = M;
  int K = 0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    M = M + masses[i];
    weighted = weighted + masses[i] * z.q[i];
    P = P + z.p[i];
    K = std::max(K, masses[i].relative_precision());
  }
  if (M.is_zero()) throw VanishingMass("total I-mass vanishes to the carried precision");
  if (M.valuation() >= K) {
    throw VanishingMass("total I-mass has valuation " + std::to_string(M.valuation()) + " >= precision " +
                        std::to_string(K));
  }
  return {weighted / M, M, P};
}

analysis::Series motivation_series(const std::vector<PadicNumber>& masses, const TrajectorySeries& traj) {
  if (masses.size() != traj.dimension()) throw DimensionMismatch("one mass per transformer");
  const auto v = traj.velocities();
  analysis::Series sum = v.front().scaled_by(masses.front());
  for (std::size_t i = 1; i < masses.size(); ++i) sum = sum + v[i].scaled_by(masses[i]);
  return sum;
}

}  // namespace padicmech::mechanics
