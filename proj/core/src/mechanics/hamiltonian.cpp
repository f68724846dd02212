#include "padicmech/mechanics/hamiltonian.hpp"

namespace padicmech::mechanics {

using analysis::Poly;

FlowKind parse_flow_kind(const std::string& name) {
  if (name == "free") return FlowKind::Free;
  if (name == "hooke_exp") return FlowKind::HookeExp;
  if (name == "hooke_trig") return FlowKind::HookeTrig;
  throw InvalidArgument("unknown system kind '" + name + "' (expected free, hooke_exp or hooke_trig)");
}

const char* to_string(FlowKind kind) {
  switch (kind) {
    case FlowKind::Free:
      return "free";
    case FlowKind::HookeExp:
      return "hooke_exp";
    case FlowKind::HookeTrig:
      return "hooke_trig";
  }
  return "?";
}

HamiltonianSpec HamiltonianSpec::with_masses(const std::vector<PadicNumber>& masses, Poly potential) {
  if (static_cast<int>(masses.size()) != potential.variables()) {
    throw DimensionMismatch("one mass per coordinate of the potential");
  }
  HamiltonianSpec h{{}, std::move(potential)};
  for (const auto& m : masses) {
    if (m.is_zero()) throw InvalidArgument("I-mass must be nonzero");
    h.alphas.push_back(PadicNumber::from_integer(1, m.prime(), h.potential.precision()) /
                       (PadicNumber::from_integer(2, m.prime(), h.potential.precision()) * m));
  }
  return h;
}

HamiltonianSpec HamiltonianSpec::standard(FlowKind kind, const std::vector<PadicNumber>& masses,
                                          const PadicNumber& beta) {
  if (masses.empty()) throw DimensionMismatch("at least one mass");
  const std::uint32_t prime = beta.prime();
  const int n = static_cast<int>(masses.size());
  const int precision = std::max(1, masses.front().relative_precision());
  Poly v(prime, n, precision);
  if (kind != FlowKind::Free) {
    const PadicNumber half = PadicNumber::from_rational(Rational(1, 2), prime, precision);
    for (int j = 0; j < n; ++j) {
      // V = -m beta^2 q^2 / 2 for the repulsive law, +m beta^2 q^2 / 2 for the restoring one.
      PadicNumber c = masses[static_cast<std::size_t>(j)] * beta * beta * half;
      if (kind == FlowKind::HookeExp) c = -c;
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(j)] = 2;
      v.add_term(e, c);
    }
  }
  return with_masses(masses, std::move(v));
}

PadicNumber HamiltonianSpec::energy(const PhaseState& z) const {
  if (z.dimension() != dimension()) throw DimensionMismatch("state and Hamiltonian dimensions differ");
  PadicNumber e = potential.evaluate(z.q);
  for (std::size_t j = 0; j < alphas.size(); ++j) e = e + alphas[j] * z.p[j] * z.p[j];
  return e;
}

std::vector<Poly> HamiltonianSpec::forces() const {
  std::vector<Poly> out;
  for (int j = 0; j < potential.variables(); ++j) out.push_back(-potential.partial(j));
  return out;
}

Rhs hamilton_rhs(const HamiltonianSpec& h, const PhaseState& z) {
  z.validate();
  if (z.dimension() != h.dimension()) throw DimensionMismatch("state and Hamiltonian dimensions differ");
  Rhs out;
  const PadicNumber two = PadicNumber::from_integer(2, z.prime(), h.precision());
  const auto f = h.forces();
  for (std::size_t j = 0; j < h.dimension(); ++j) {
    out.qdot.push_back(two * h.alphas[j] * z.p[j]);
    out.pdot.push_back(f[j].evaluate(z.q));
  }
  return out;
}

}  // namespace padicmech::mechanics
