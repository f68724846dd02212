#include "padicmech/mechanics/audit.hpp"

#include <algorithm>

#include "padicmech/analysis/integral.hpp"

namespace padicmech::mechanics {

using analysis::Series;

AuditReport work_energy_audit(const HamiltonianSpec& h, const TrajectorySeries& traj, const PadicNumber& t0,
                              const PadicNumber& t1) {
  if (traj.dimension() != h.dimension()) throw DimensionMismatch("trajectory and Hamiltonian dimensions differ");
  const int K = h.precision();
  const auto a = traj.evaluate(t0);
  const auto b = traj.evaluate(t1);

  const auto forces = h.forces();
  const auto velocities = traj.velocities();
  Series integrand = Series::constant(PadicNumber::zero(traj.prime()), K);
  for (std::size_t j = 0; j < h.dimension(); ++j) integrand = integrand + forces[j].compose(traj.q) * velocities[j];
  const auto w = analysis::definite_integral(integrand, t0 - traj.t0, t1 - traj.t0, K);

  auto kinetic = [&](const PhaseState& z) {
    PadicNumber t = PadicNumber::zero(traj.prime());
    for (std::size_t j = 0; j < h.dimension(); ++j) t = t + h.alphas[j] * z.p[j] * z.p[j];
    return t;
  };
  const PadicNumber dT = kinetic(b.state) - kinetic(a.state);
  const PadicNumber dV = h.potential.evaluate(b.state.q) - h.potential.evaluate(a.state.q);

  const int known = std::min({w.value.absolute_precision(), dT.absolute_precision(), dV.absolute_precision(), K});
  return {w.value,
          dT,
          dV,
          (w.value - dT).norm(),
          (w.value + dV).norm(),
          std::max(0, K - known),
          w.certified && a.certified && b.certified};
}

}  // namespace padicmech::mechanics
