#include "padicmech/mechanics/trajectory.hpp"

#include <algorithm>

namespace padicmech::mechanics {

int TrajectorySeries::degree() const {
  int d = 0;
  for (const auto& s : q) d = std::max(d, s.degree());
  for (const auto& s : p) d = std::max(d, s.degree());
  return d;
}

bool TrajectorySeries::contains(const PadicNumber& t) const {
  return validity.contains_order((t - t0).order());
}

TrajectoryPoint TrajectorySeries::evaluate(const PadicNumber& t) const {
  const PadicNumber s = t - t0;
  if (!validity.contains_order(s.order())) {
    throw DomainViolation(condition, "t - t0 has valuation " + std::to_string(s.order()) +
                                         ", the trajectory is defined for " + validity.describe(prime()));
  }
  TrajectoryPoint out{PhaseState{{}, {}, t}, true};
  for (const auto& f : q) {
    const auto e = f.evaluate(s);
    out.state.q.push_back(e.value);
    out.certified &= e.certified;
  }
  for (const auto& f : p) {
    const auto e = f.evaluate(s);
    out.state.p.push_back(e.value);
    out.certified &= e.certified;
  }
  return out;
}

std::vector<analysis::Series> TrajectorySeries::velocities() const {
  std::vector<analysis::Series> out;
  for (const auto& f : q) out.push_back(f.derive());
  return out;
}

}  // namespace padicmech::mechanics
