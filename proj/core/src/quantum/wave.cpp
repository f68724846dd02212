#include "padicmech/quantum/wave.hpp"

#include "padicmech/analysis/elementary.hpp"

namespace padicmech::quantum {

using analysis::Elementary;
using analysis::Series;

Rational default_planck(std::uint32_t prime) { return Rational(1, prime); }

PlaneWave plane_wave(const PadicNumber& pp, const PadicNumber& energy, const PadicNumber& t, const PadicNumber& x,
                     const Rational& planck, int degree) {
  const std::uint32_t prime = pp.prime();
  const int precision = std::max({1, pp.relative_precision(), energy.relative_precision()});
  const PadicNumber h = PadicNumber::from_rational(planck, prime, precision);
  const PadicNumber theta = (pp * x - energy * t) / h;
  const int rmin = analysis::convergence_valuation(prime);
  if (!theta.is_exact_zero() && theta.order() < rmin) {
    throw DomainViolation("|(p x - E t)/h_p|_p <= r_p",
                          "phase has valuation " + std::to_string(theta.order()) + ", needs >= " + std::to_string(rmin));
  }
  require_extension(prime);
  const auto c = analysis::elementary(Elementary::Cos, prime, degree, precision).evaluate(theta);
  const auto s = analysis::elementary(Elementary::Sin, prime, degree, precision).evaluate(theta);
  return {PadicComplex(c.value, s.value), theta, c.certified && s.certified};
}

WavePoly plane_wave_series(const PadicNumber& pp, const PadicNumber& energy, const Rational& planck, int degree,
                           int precision) {
  const std::uint32_t prime = pp.prime();
  require_extension(prime);
  if (degree < 0) throw InvalidArgument("degree must be >= 0");
  const PadicNumber h = PadicNumber::from_rational(planck, prime, precision);
  const PadicComplex i = PadicComplex::i(prime, precision);
  // i theta = i (pp/h) x - i (E/h) t
  WavePoly itheta(prime, 2, precision, degree);
  itheta.add_term({0, 1}, i * PadicComplex(pp / h));
  itheta.add_term({1, 0}, -(i * PadicComplex(energy / h)));
  WavePoly term = WavePoly::constant(PadicComplex(PadicNumber::from_integer(1, prime, precision)), 2, precision)
                      .truncated(degree);
  WavePoly sum = term;
  for (int n = 1; n <= degree; ++n) {
    term = (term * itheta).scaled_by(PadicComplex(PadicNumber::from_rational(Rational(1, n), prime, precision)));
    sum = sum + term;
  }
  return sum;
}

WavePoly schrodinger_residual(const WavePoly& psi, const WavePoly& potential, const PadicNumber& mass,
                              const Rational& planck) {
  if (psi.variables() != 2 || potential.variables() != 2) throw DimensionMismatch("expected functions of (t, x)");
  if (mass.is_zero()) throw InvalidArgument("I-mass must be invertible");
  const std::uint32_t prime = psi.prime();
  const int k = psi.precision();
  const PadicNumber h = PadicNumber::from_rational(planck, prime, k);
  const PadicComplex h_over_i = -(PadicComplex::i(prime, k) * PadicComplex(h));
  const PadicComplex kinetic(h * h / (PadicNumber::from_integer(2, prime, k) * mass));
  WavePoly r = psi.partial(0).scaled_by(h_over_i) - psi.partial(1).partial(1).scaled_by(kinetic) + potential * psi;
  if (psi.max_degree()) r = r.truncated(*psi.max_degree() - 2);
  return r;
}

Series interference_term(std::uint32_t prime, int degree, int precision) {
  if (degree < 2) throw InvalidArgument("T(alpha) needs degree >= 2");
  const Series sin = analysis::elementary(Elementary::Sin, prime, degree + 2, precision);
  const Series cos = analysis::elementary(Elementary::Cos, prime, degree + 2, precision);
  const Series alpha = Series::variable(prime, precision);
  const Series one = Series::from_rationals(prime, precision, {1});
  return (alpha * sin).truncated(degree + 2).divided_by((one - cos).truncated(degree + 2)).truncated(degree);
}

}  // namespace padicmech::quantum
