#pragma once

#include <vector>

#include "padicmech/analysis/multi_poly.hpp"

namespace padicmech::mechanics {

/// Q_j = sum_i F_i(q(xi)) dq_i/dxi_j for a chart q_i(xi_1, ..., xi_n) and
/// forces F_i(q_1, ..., q_N). Results are polynomials in the chart variables.
std::vector<analysis::Poly> generalized_forces(const std::vector<analysis::Poly>& forces,
                                               const std::vector<analysis::Poly>& chart, int generalized);

/// d/dt(dL/dxidot_j) - dL/dxi_j along xi(t), for L(xi_1..xi_n, xidot_1..xidot_n).
/// All coefficients vanishing certifies the trajectory solves the Lagrange equations.
std::vector<analysis::Series> lagrange_residual(const analysis::Poly& lagrangian,
                                                const std::vector<analysis::Series>& xi);

/// Q_j = -dV/dxi_j + d/dt(dV/dxidot_j) for a velocity-dependent potential
/// V(xi, xidot), evaluated along xi(t).
std::vector<analysis::Series> velocity_dependent_forces(const analysis::Poly& potential,
                                                        const std::vector<analysis::Series>& xi);

}  // namespace padicmech::mechanics
