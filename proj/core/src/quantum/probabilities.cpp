#include "padicmech/quantum/probabilities.hpp"

namespace padicmech::quantum {
namespace {

GaussianRational bilinear(const std::vector<GaussianRational>& x, const std::vector<GaussianRational>& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vectors of different dimension");
  GaussianRational s{0, 0};
  for (std::size_t i = 0; i < x.size(); ++i) s = s + x[i] * y[i];
  return s;
}

}  // namespace

MixedState mixed_state_probabilities(const std::vector<GaussianRational>& coeffs, Weighting weighting) {
  if (coeffs.empty()) throw DimensionMismatch("a mixed state needs at least one component");
  MixedState out{{}, true, true};
  GaussianRational sum{0, 0};
  for (const auto& c : coeffs) {
    const GaussianRational w = weighting == Weighting::Bilinear ? c * c : GaussianRational{c.modulus_sq(), 0};
    out.weights.push_back(w);
    sum = sum + w;
    out.real_interpretable &= w.is_real() && w.re >= 0 && w.re <= 1;
  }
  const GaussianRational deficit = GaussianRational{1, 0} - sum;
  if (deficit != GaussianRational{0, 0}) throw NotNormalized(deficit);
  return out;
}

Rebasis rebasis_probabilities(const std::vector<GaussianRational>& phi,
                              const std::vector<std::vector<GaussianRational>>& basis) {
  if (basis.size() != phi.size()) throw DimensionMismatch("basis must have one vector per dimension");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const GaussianRational expected{i == j ? 1 : 0, 0};
      if (bilinear(basis[i], basis[j]) != expected) {
        throw InvalidArgument("basis is not orthonormal: (psi_" + std::to_string(i + 1) + ", psi_" +
                              std::to_string(j + 1) + ") = " + to_string(bilinear(basis[i], basis[j])));
      }
    }
  }
  Rebasis out{{}, {}, 0, 0};
  for (const auto& c : phi) out.canonical_total += c.modulus_sq();
  for (const auto& psi : basis) {
    const GaussianRational d = bilinear(phi, psi);
    out.amplitudes.push_back(d);
    out.weights.push_back(d.modulus_sq());
    out.total += d.modulus_sq();
  }
  return out;
}

}  // namespace padicmech::quantum
