#pragma once

#include "padicmech/mechanics/hamiltonian.hpp"
#include "padicmech/mechanics/trajectory.hpp"
#include "padicmech/norm.hpp"

namespace padicmech::mechanics {

struct AuditReport {
  PadicNumber work;               ///< W = sum_j int f_j(q(s)) q_j'(s) ds
  PadicNumber kinetic_change;     ///< T(t1) - T(t0)
  PadicNumber potential_change;   ///< V(q(t1)) - V(q(t0))
  Norm work_vs_kinetic;           ///< |W - dT|_p
  Norm work_vs_potential;         ///< |W + dV|_p
  /// Digits short of the working precision among W, dT and dV; the
  /// discrepancies are meaningful down to p^-(K - precision_loss).
  int precision_loss;
  bool certified;
};

/// Work-energy audit along an analytic trajectory between t0 and t1.
/// Both instants must lie in the trajectory ball and in the domain where the
/// integrated series converges (DomainViolation otherwise).
AuditReport work_energy_audit(const HamiltonianSpec& h, const TrajectorySeries& traj, const PadicNumber& t0,
                              const PadicNumber& t1);

}  // namespace padicmech::mechanics
