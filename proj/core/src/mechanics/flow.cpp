#include "padicmech/mechanics/flow.hpp"

#include <algorithm>

#include "padicmech/analysis/elementary.hpp"

namespace padicmech::mechanics {

using analysis::BoundedTail;
using analysis::Radius;
using analysis::Series;

FlowParams FlowParams::free_with_alpha(const PadicNumber& alpha) {
  if (alpha.is_zero()) throw InvalidArgument("alpha must be nonzero");
  const int k = std::max(1, alpha.relative_precision());
  const PadicNumber mass = PadicNumber::from_integer(1, alpha.prime(), k) /
                           (PadicNumber::from_integer(2, alpha.prime(), k) * alpha);
  return {FlowKind::Free, mass, PadicNumber::zero(alpha.prime())};
}

TrajectorySeries closed_flow_series(const FlowParams& params, const PhaseState& z0, int degree) {
  z0.validate();
  if (degree < 1) throw InvalidArgument("degree must be >= 1");
  if (params.mass.is_zero()) throw InvalidArgument("I-mass must be nonzero");
  const std::uint32_t prime = z0.prime();
  const int precision = std::max(1, params.mass.relative_precision());
  const bool free = params.kind == FlowKind::Free || params.beta.is_exact_zero();
  const PadicNumber& beta = params.beta;
  const PadicNumber& m = params.mass;

  Series C = Series::from_rationals(prime, precision, {1});
  Series S = Series::from_rationals(prime, precision, {0, 1});
  Radius validity = Radius::entire();
  if (!free) {
    // C_{2k} = sigma^k beta^{2k}/(2k)!, S_{2k+1} = sigma^k beta^{2k}/(2k+1)!.
    const int sigma = params.kind == FlowKind::HookeExp ? 1 : -1;
    std::vector<PadicNumber> c(static_cast<std::size_t>(degree + 1), PadicNumber::zero(prime));
    std::vector<PadicNumber> s = c;
    const PadicNumber beta2 = beta * beta;
    PadicNumber power = PadicNumber::from_integer(1, prime, precision);
    BigInt fact = 1;
    for (int n = 0; n <= degree; ++n) {
      if (n > 0) fact *= n;
      const int k = n / 2;
      const Rational r(BigInt((k % 2 == 1 && sigma < 0) ? -1 : 1), fact);
      const PadicNumber term = power * PadicNumber::from_rational(r, prime, precision);
      if (n % 2 == 0) {
        c[static_cast<std::size_t>(n)] = term;
      } else {
        s[static_cast<std::size_t>(n)] = term;
        power = power * beta2;
      }
    }
    const int vb = beta.order();
    const Rational slope = Rational(1, prime - 1) - vb;
    const int rmin = analysis::convergence_valuation(prime);
    validity = Radius::at_least(rmin - vb);
    C = Series(prime, precision, std::move(c), BoundedTail{slope, 0, 0}, validity);
    S = Series(prime, precision, std::move(s), BoundedTail{slope, Rational(vb), 0}, validity);
  }
  const PadicNumber mb2 = free ? PadicNumber::zero(prime) : m * beta * beta;

  TrajectorySeries out{z0.t, {}, {}, validity, free ? "t in Z_p" : "|beta*t|_p <= r_p"};
  for (std::size_t j = 0; j < z0.dimension(); ++j) {
    out.q.push_back(C.scaled_by(z0.q[j]) + S.scaled_by(z0.p[j] / m));
    Series pj = C.scaled_by(z0.p[j]);
    if (!free) {
      const Series ms = S.scaled_by(mb2 * z0.q[j]);
      pj = params.kind == FlowKind::HookeExp ? pj + ms : pj - ms;
    }
    out.p.push_back(pj);
  }
  return out;
}

PhaseState closed_flow(const FlowParams& params, const PhaseState& z0, const PadicNumber& t, int degree) {
  return closed_flow_series(params, z0, degree).evaluate(t).state;
}

TrajectorySeries taylor_integrate(const HamiltonianSpec& h, const PhaseState& z0, int degree) {
  z0.validate();
  if (degree < 1) throw InvalidArgument("degree must be >= 1");
  const std::size_t n = h.dimension();
  if (z0.dimension() != n) throw DimensionMismatch("state and Hamiltonian dimensions differ");
  const std::uint32_t prime = z0.prime();
  const int precision = h.precision();
  const auto forces = h.forces();
  const PadicNumber two = PadicNumber::from_integer(2, prime, precision);

  std::vector<std::vector<PadicNumber>> a(n), b(n);
  for (std::size_t j = 0; j < n; ++j) {
    a[j].push_back(z0.q[j]);
    b[j].push_back(z0.p[j]);
  }
  for (int k = 0; k < degree; ++k) {
    std::vector<Series> qs;
    for (std::size_t j = 0; j < n; ++j) qs.push_back(Series::polynomial(prime, precision, a[j]));
    const PadicNumber kp1 = PadicNumber::from_integer(k + 1, prime, precision);
    std::vector<PadicNumber> next_b;
    for (std::size_t j = 0; j < n; ++j) next_b.push_back(forces[j].compose(qs).coeff_or_zero(k) / kp1);
    for (std::size_t j = 0; j < n; ++j) {
      a[j].push_back(two * h.alphas[j] * b[j][static_cast<std::size_t>(k)] / kp1);
      b[j].push_back(next_b[j]);
    }
  }

  int nu = 0;
  auto widen = [&](const std::vector<PadicNumber>& cs) {
    for (std::size_t k = 1; k < cs.size(); ++k) {
      if (cs[k].is_zero()) continue;
      const int v = cs[k].valuation();
      if (v < 0) {
        const int kk = static_cast<int>(k);
        nu = std::max(nu, (-v + kk - 1) / kk);
      }
    }
  };
  for (std::size_t j = 0; j < n; ++j) {
    widen(a[j]);
    widen(b[j]);
  }
  if (nu > precision) {
    throw RadiusCollapse("coefficient growth leaves no ball of radius >= p^-" + std::to_string(precision));
  }
  // Without forces the recursion stops at degree 1 and the series is exact.
  const bool force_free = std::all_of(forces.begin(), forces.end(), [](const auto& f) { return f.is_zero(); });
  if (force_free) {
    TrajectorySeries out{z0.t, {}, {}, Radius::entire(), "t in Z_p"};
    for (std::size_t j = 0; j < n; ++j) {
      out.q.push_back(Series::polynomial(prime, precision, a[j]));
      out.p.push_back(Series::polynomial(prime, precision, b[j]));
    }
    return out;
  }
  TrajectorySeries out{z0.t, {}, {}, Radius::at_least(nu), "|t - t0|_p <= p^-" + std::to_string(nu)};
  for (std::size_t j = 0; j < n; ++j) {
    out.q.push_back(Series(prime, precision, a[j], analysis::UnknownTail{}, out.validity));
    out.p.push_back(Series(prime, precision, b[j], analysis::UnknownTail{}, out.validity));
  }
  return out;
}

Series energy_series(const HamiltonianSpec& h, const TrajectorySeries& traj) {
  if (traj.dimension() != h.dimension()) throw DimensionMismatch("trajectory and Hamiltonian dimensions differ");
  Series e = h.potential.compose(traj.q);
  for (std::size_t j = 0; j < h.dimension(); ++j) e = e + (traj.p[j] * traj.p[j]).scaled_by(h.alphas[j]);
  return e;
}

}  // namespace padicmech::mechanics
