#pragma once

#include <string>
#include <vector>

#include "padicmech/padic_int.hpp"
#include "padicmech/padic_number.hpp"

namespace padicmech::mechanics {

enum class ConstraintKind {
  Sphere,  ///< |q_i - a|_p = r for every i
  Leader,  ///< |q_i - q_leader|_p = r_i for every follower i
  Rigid,   ///< |q_i - q_j|_p = r_ij for every pair i < j
};

ConstraintKind parse_constraint_kind(const std::string& name);

struct ConstraintResidual {
  std::string label;
  Rational distance;  ///< the measured p-adic distance
  Rational target;
  Rational residual;  ///< |distance - target|
  bool satisfied() const { return residual == 0; }
};

/// Radii must be powers of p (or 0). A distance that vanishes to the carried
/// precision is read as 0.
std::vector<ConstraintResidual> check_sphere(const std::vector<PadicNumber>& q, const PadicNumber& a,
                                             const Rational& r);
std::vector<ConstraintResidual> check_leader(const std::vector<PadicNumber>& q, std::size_t leader,
                                             const std::vector<Rational>& r);
/// r[i][j] for i < j; the other entries are ignored.
std::vector<ConstraintResidual> check_rigid(const std::vector<PadicNumber>& q,
                                            const std::vector<std::vector<Rational>>& r);

/// Digit reading of q in S_{p^-k}(a): digits 0..k-1 equal those of a and
/// digit k differs.
bool sphere_membership_by_digits(const PadicInt& q, const PadicInt& a, int k);

}  // namespace padicmech::mechanics
