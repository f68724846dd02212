#include "padicmech/mechanics/constraints.hpp"

#include "padicmech/ball.hpp"
#include "padicmech/errors.hpp"

namespace padicmech::mechanics {
namespace {

void require_radius(const Rational& r, std::uint32_t p) {
  if (r == 0) return;
  if (r < 0) throw InvalidArgument("radius must be non-negative");
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const BigInt& power = num == 1 ? den : num;
  if ((num != 1 && den != 1) || power != ipow(BigInt(p), static_cast<unsigned>(floor_log(power, p)))) {
    throw InvalidArgument("radius " + to_string(r) + " is not a power of " + std::to_string(p));
  }
}

ConstraintResidual measure(std::string label, const PadicNumber& x, const PadicNumber& y, const Rational& r) {
  require_radius(r, x.prime());
  const Rational d = (x - y).norm().value();
  const Rational diff = d - r;
  return {std::move(label), d, r, diff < 0 ? Rational(-diff) : diff};
}

}  // namespace

ConstraintKind parse_constraint_kind(const std::string& name) {
  if (name == "C1" || name == "sphere") return ConstraintKind::Sphere;
  if (name == "C2" || name == "leader") return ConstraintKind::Leader;
  if (name == "C3" || name == "rigid") return ConstraintKind::Rigid;
  throw InvalidArgument("unknown constraint '" + name + "' (expected C1, C2 or C3)");
}

std::vector<ConstraintResidual> check_sphere(const std::vector<PadicNumber>& q, const PadicNumber& a,
                                             const Rational& r) {
  std::vector<ConstraintResidual> out;
  for (std::size_t i = 0; i < q.size(); ++i) out.push_back(measure("q" + std::to_string(i + 1), q[i], a, r));
  return out;
}

std::vector<ConstraintResidual> check_leader(const std::vector<PadicNumber>& q, std::size_t leader,
                                             const std::vector<Rational>& r) {
  if (leader >= q.size()) throw DimensionMismatch("leader index out of range");
  if (r.size() != q.size()) throw DimensionMismatch("one radius per transformer (the leader's is ignored)");
  std::vector<ConstraintResidual> out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i == leader) continue;
    out.push_back(measure("q" + std::to_string(i + 1) + "-q" + std::to_string(leader + 1), q[i], q[leader], r[i]));
  }
  return out;
}

std::vector<ConstraintResidual> check_rigid(const std::vector<PadicNumber>& q,
                                            const std::vector<std::vector<Rational>>& r) {
  if (r.size() != q.size()) throw DimensionMismatch("rigid-body radii must form an N x N table");
  std::vector<ConstraintResidual> out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (r[i].size() != q.size()) throw DimensionMismatch("rigid-body radii must form an N x N table");
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      out.push_back(measure("q" + std::to_string(i + 1) + "-q" + std::to_string(j + 1), q[i], q[j], r[i][j]));
    }
  }
  return out;
}

bool sphere_membership_by_digits(const PadicInt& q, const PadicInt& a, int k) {
  return Ball(a, k).on_sphere(q);
}

}  // namespace padicmech::mechanics
