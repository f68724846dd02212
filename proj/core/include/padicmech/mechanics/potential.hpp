#pragma once

#include <string>
#include <vector>

#include "padicmech/analysis/multi_poly.hpp"
#include "padicmech/norm.hpp"

namespace padicmech::mechanics {

enum class PotentialKind { Democratic, Hierarchical };

PotentialKind parse_potential_kind(const std::string& name);

struct LayerNorm {
  std::string label;  ///< "A0", "A1", ..., "B"
  Norm norm;
};

struct PotentialResult {
  analysis::Poly potential;
  std::vector<LayerNorm> layers;
};

/// Democratic: V = sum_{i != j} Phi(q_i - q_j) over ordered pairs.
/// Hierarchical, weights A_0..A_k and B:
///   V = sum_l A_l sum_{j not in 0..l} Phi(q_l - q_j) + B sum_{i != j, i,j > k} Phi(q_i - q_j).
/// The hierarchy |A_0| >> ... >> |A_k| >> |B| is read as a factor of at least
/// p per step; a weaker step raises HierarchyViolation.
PotentialResult potential_build(PotentialKind kind, const analysis::Series& phi, int transformers,
                                const std::vector<PadicNumber>& weights = {},
                                const PadicNumber* background = nullptr);

}  // namespace padicmech::mechanics
