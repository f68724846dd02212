#pragma once

#include <vector>

#include "padicmech/errors.hpp"
#include "padicmech/quantum/complex.hpp"

namespace padicmech::quantum {

enum class Weighting {
  /// P(A = lambda_n | phi) = q_n^2, from the bilinear (phi, phi) = sum q_n^2.
  Bilinear,
  /// v_n = c_n conj(c_n).
  Conjugate,
};

/// The weights do not sum to 1. `deficit` is 1 - sum.
class NotNormalized : public Error {
 public:
  explicit NotNormalized(GaussianRational deficit)
      : Error("state is not normalized: 1 - sum of weights = " + to_string(deficit)), deficit_(std::move(deficit)) {}
  const GaussianRational& deficit() const noexcept { return deficit_; }

 private:
  GaussianRational deficit_;
};

struct MixedState {
  std::vector<GaussianRational> weights;
  bool normalized;
  /// Every weight is a rational in [0, 1]. Weights are never clamped:
  /// p-adic probabilities may lie outside [0, 1].
  bool real_interpretable;
};

/// Throws NotNormalized unless the weights sum to exactly 1.
MixedState mixed_state_probabilities(const std::vector<GaussianRational>& coeffs, Weighting weighting);

struct Rebasis {
  std::vector<GaussianRational> amplitudes;  ///< d_k = (phi, psi_k)
  std::vector<Rational> weights;             ///< u_k = d_k conj(d_k)
  Rational total;
  /// sum c_j conj(c_j) in the original coordinates.
  Rational canonical_total;
};

/// Expands phi in another basis orthonormal for the bilinear form; throws
/// InvalidArgument when the family is not orthonormal.
Rebasis rebasis_probabilities(const std::vector<GaussianRational>& phi,
                              const std::vector<std::vector<GaussianRational>>& basis);

}  // namespace padicmech::quantum
