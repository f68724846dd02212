#pragma once

#include <vector>

#include "padicmech/analysis/multi_poly.hpp"
#include "padicmech/mechanics/phase_state.hpp"

namespace padicmech::mechanics {

enum class FlowKind {
  Free,
  /// f = +m beta^2 q: solutions a e^(beta t) + b e^(-beta t).
  HookeExp,
  /// f = -m beta^2 q: solutions a cos(beta t) + b sin(beta t).
  HookeTrig,
};

FlowKind parse_flow_kind(const std::string& name);
const char* to_string(FlowKind kind);

/// H(q, p) = sum_j alpha_j p_j^2 + V(q_1, ..., q_N).
struct HamiltonianSpec {
  std::vector<PadicNumber> alphas;
  analysis::Poly potential;

  std::uint32_t prime() const { return potential.prime(); }
  std::size_t dimension() const { return alphas.size(); }
  int precision() const { return potential.precision(); }

  /// alpha_j = 1/(2 m_j); throws InvalidArgument on a zero mass.
  static HamiltonianSpec with_masses(const std::vector<PadicNumber>& masses, analysis::Poly potential);
  /// Independent copies of the free or Hooke system, one per mass, with a
  /// common beta.
  static HamiltonianSpec standard(FlowKind kind, const std::vector<PadicNumber>& masses, const PadicNumber& beta);

  PadicNumber energy(const PhaseState& z) const;
  /// -dV/dq_j as polynomials.
  std::vector<analysis::Poly> forces() const;
};

struct Rhs {
  std::vector<PadicNumber> qdot;  ///< dH/dp_j = 2 alpha_j p_j
  std::vector<PadicNumber> pdot;  ///< -dH/dq_j = -dV/dq_j
};

Rhs hamilton_rhs(const HamiltonianSpec& h, const PhaseState& z);

}  // namespace padicmech::mechanics
