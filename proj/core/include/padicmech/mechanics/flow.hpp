#pragma once

#include "padicmech/mechanics/hamiltonian.hpp"
#include "padicmech/mechanics/trajectory.hpp"

namespace padicmech::mechanics {

struct FlowParams {
  FlowKind kind;
  PadicNumber mass;  ///< alpha = 1/(2m)
  PadicNumber beta;  ///< ignored for the free kind

  /// Free flow parameterized by alpha instead of the mass.
  static FlowParams free_with_alpha(const PadicNumber& alpha);
};

/// The analytic flow of the free or Hooke system as series in s = t - t0.
///
/// With C(s) = cosh(beta s) or cos(beta s) and S(s) = C-partner / beta
/// (sinh(beta s)/beta or sin(beta s)/beta), every coordinate obeys
///   q(s) = q0 C(s) + (p0/m) S(s),   p(s) = m q'(s),
/// which is a e^(beta s) + b e^(-beta s) (resp. a cos + b sin) written without
/// dividing by beta; beta = 0 gives the free flow q0 + 2 alpha p0 s.
///
/// The series converge exactly on |beta s|_p <= r_p; outside it evaluation
/// raises DomainViolation("|beta*t|_p <= r_p").
TrajectorySeries closed_flow_series(const FlowParams& params, const PhaseState& z0, int degree = kDefaultDegree);

/// closed_flow_series evaluated at t.
PhaseState closed_flow(const FlowParams& params, const PhaseState& z0, const PadicNumber& t,
                       int degree = kDefaultDegree);

/// Generic solver: expands q and p in s = t - t0 from
///   (k+1) a_{k+1} = 2 alpha b_k,   (k+1) b_{k+1} = [-dV/dq (q(s))]_k.
/// No tail is certified. The validity ball is the smallest nu >= 0 with
/// v(c_k) + k nu >= 0 for every computed coefficient; RadiusCollapse is raised
/// when nu exceeds the working precision.
TrajectorySeries taylor_integrate(const HamiltonianSpec& h, const PhaseState& z0, int degree = kDefaultDegree);

/// H(q(s), p(s)) as a series; conservation means every c_n, n >= 1, vanishes.
analysis::Series energy_series(const HamiltonianSpec& h, const TrajectorySeries& traj);

}  // namespace padicmech::mechanics
