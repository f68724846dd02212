#include "padicmech/mechanics/potential.hpp"

namespace padicmech::mechanics {

using analysis::Poly;

PotentialKind parse_potential_kind(const std::string& name) {
  if (name == "democratic") return PotentialKind::Democratic;
  if (name == "hierarchical") return PotentialKind::Hierarchical;
  throw InvalidArgument("unknown potential kind '" + name + "'");
}

namespace {

// Phi(q_i - q_j) as a polynomial in all N coordinates.
Poly pair_term(const Poly& phi, int n, int i, int j) {
  const std::uint32_t p = phi.prime();
  const int k = phi.precision();
  const Poly diff = Poly::variable(p, n, i, k) - Poly::variable(p, n, j, k);
  return phi.substitute({diff});
}

}  // namespace

PotentialResult potential_build(PotentialKind kind, const analysis::Series& phi_series, int transformers,
                                const std::vector<PadicNumber>& weights, const PadicNumber* background) {
  if (transformers < 1) throw InvalidArgument("need at least one transformer");
  const Poly phi = Poly::from_series(phi_series);
  const int n = transformers;
  const std::uint32_t prime = phi.prime();
  PotentialResult out{Poly(prime, n, phi.precision()), {}};

  if (kind == PotentialKind::Democratic) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) out.potential = out.potential + pair_term(phi, n, i, j);
      }
    }
    return out;
  }

  if (!background) throw InvalidArgument("hierarchical potential needs the background weight B");
  const int layers = static_cast<int>(weights.size());
  if (layers > n) throw DimensionMismatch("more hierarchy layers than transformers");
  for (int l = 0; l < layers; ++l) out.layers.push_back({"A" + std::to_string(l), weights[static_cast<std::size_t>(l)].norm()});
  out.layers.push_back({"B", background->norm()});
  for (std::size_t l = 1; l < out.layers.size(); ++l) {
    const Norm& prev = out.layers[l - 1].norm;
    const Norm& next = out.layers[l].norm;
    if (next.is_zero()) continue;
    if (prev.is_zero() || next.valuation() < prev.valuation() + 1) {
      throw HierarchyViolation("|" + out.layers[l].label + "|_p = " + next.to_string() + " is not <= |" +
                               out.layers[l - 1].label + "|_p / p = " +
                               (prev.is_zero() ? std::string("0") : padicmech::to_string(prev.value() / prime)));
    }
  }

  for (int l = 0; l < layers; ++l) {
    const PadicNumber& a = weights[static_cast<std::size_t>(l)];
    if (a.is_exact_zero()) continue;
    Poly layer(prime, n, phi.precision());
    for (int j = l + 1; j < n; ++j) layer = layer + pair_term(phi, n, l, j);
    out.potential = out.potential + layer.scaled_by(a);
  }
  if (!background->is_exact_zero()) {
    Poly rest(prime, n, phi.precision());
    for (int i = layers; i < n; ++i) {
      for (int j = layers; j < n; ++j) {
        if (i != j) rest = rest + pair_term(phi, n, i, j);
      }
    }
    out.potential = out.potential + rest.scaled_by(*background);
  }
  return out;
}

}  // namespace padicmech::mechanics
