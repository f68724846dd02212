#include "padicmech/mechanics/lagrange.hpp"

namespace padicmech::mechanics {

using analysis::Poly;
using analysis::Series;

std::vector<Poly> generalized_forces(const std::vector<Poly>& forces, const std::vector<Poly>& chart,
                                     int generalized) {
  if (forces.size() != chart.size()) throw DimensionMismatch("one force per chart coordinate");
  if (forces.empty()) throw DimensionMismatch("empty system");
  for (const auto& c : chart) {
    if (c.variables() != generalized) throw DimensionMismatch("chart maps must use the generalized coordinates");
  }
  for (const auto& f : forces) {
    if (f.variables() != static_cast<int>(chart.size())) throw DimensionMismatch("forces must be functions of q");
  }
  std::vector<Poly> pulled;
  for (const auto& f : forces) pulled.push_back(f.substitute(chart));
  std::vector<Poly> out;
  for (int j = 0; j < generalized; ++j) {
    Poly q(chart.front().prime(), generalized, chart.front().precision());
    for (std::size_t i = 0; i < chart.size(); ++i) q = q + pulled[i] * chart[i].partial(j);
    out.push_back(q);
  }
  return out;
}

namespace {

// d/dt(dF/dxidot_j) - dF/dxi_j along xi.
std::vector<Series> euler_lagrange(const Poly& f, const std::vector<Series>& xi) {
  const int n = static_cast<int>(xi.size());
  if (f.variables() != 2 * n) throw DimensionMismatch("expected a function of (xi, xidot)");
  std::vector<Series> args = xi;
  for (const auto& x : xi) args.push_back(x.derive());
  std::vector<Series> out;
  for (int j = 0; j < n; ++j) {
    const Series momentum = f.partial(n + j).compose(args);
    out.push_back(momentum.derive() - f.partial(j).compose(args));
  }
  return out;
}

}  // namespace

std::vector<Series> lagrange_residual(const Poly& lagrangian, const std::vector<Series>& xi) {
  return euler_lagrange(lagrangian, xi);
}

std::vector<Series> velocity_dependent_forces(const Poly& potential, const std::vector<Series>& xi) {
  return euler_lagrange(potential, xi);
}

}  // namespace padicmech::mechanics
