#pragma once

#include <vector>

#include "padicmech/mechanics/trajectory.hpp"

namespace padicmech::mechanics {

struct SystemSummary {
  PadicNumber center;      ///< sum m_i q_i / M, the center of information
  PadicNumber total_mass;  ///< M
  PadicNumber motivation;  ///< P = sum m_i qdot_i = sum p_i
};

/// Reduces N transformers sharing one I-time. Raises VanishingMass when M is
/// zero to the carried precision or v_p(M) >= K, where the center would carry
/// no digits.
SystemSummary system_reduce(const std::vector<PadicNumber>& masses, const PhaseState& z);

/// P(s) = sum_i m_i q_i'(s). Computed from the q series alone, so a constant
/// result is a genuine check of conservation rather than of sum p_i.
analysis::Series motivation_series(const std::vector<PadicNumber>& masses, const TrajectorySeries& traj);

}  // namespace padicmech::mechanics
