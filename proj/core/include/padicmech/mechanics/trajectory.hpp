#pragma once

#include <string>
#include <vector>

#include "padicmech/analysis/power_series.hpp"
#include "padicmech/mechanics/phase_state.hpp"

namespace padicmech::mechanics {

struct TrajectoryPoint {
  PhaseState state;
  /// Every component carries a certified tail bound.
  bool certified;
};

/// q_j and p_j as power series in s = t - t0, valid on the ball
/// v_p(t - t0) >= validity.min_valuation.
struct TrajectorySeries {
  PadicNumber t0;
  std::vector<analysis::Series> q;
  std::vector<analysis::Series> p;
  analysis::Radius validity;
  /// Inequality reported when evaluate() is asked for a t outside the ball.
  std::string condition;

  std::uint32_t prime() const { return t0.prime(); }
  std::size_t dimension() const { return q.size(); }
  int degree() const;

  bool contains(const PadicNumber& t) const;
  /// Throws DomainViolation(condition) outside the validity ball.
  TrajectoryPoint evaluate(const PadicNumber& t) const;
  /// d q_j / ds.
  std::vector<analysis::Series> velocities() const;
};

}  // namespace padicmech::mechanics
