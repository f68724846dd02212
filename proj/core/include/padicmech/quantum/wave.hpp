#pragma once

#include "padicmech/analysis/multi_poly.hpp"
#include "padicmech/quantum/complex.hpp"

namespace padicmech::quantum {

using WavePoly = analysis::MultiPoly<PadicComplex>;

/// h_p = 1/p, the choice that keeps plane-wave phases inside r_p for odd p.
Rational default_planck(std::uint32_t prime);

struct PlaneWave {
  PadicComplex value;
  PadicNumber phase;  ///< theta = (pp x - E t) / h_p
  bool certified;
};

/// psi(t, x) = e^{i theta} = cos theta + i sin theta with theta = (pp x - E t)/h_p.
/// The phase must satisfy |theta|_p <= r_p (DomainViolation, checked first),
/// and Q_p(i) must exist (ExtensionUndefined).
PlaneWave plane_wave(const PadicNumber& pp, const PadicNumber& energy, const PadicNumber& t, const PadicNumber& x,
                     const Rational& planck, int degree = kDefaultDegree);

/// The plane wave as a polynomial in (t, x) of total degree <= D:
/// sum_{n <= D} (i theta)^n / n!.
WavePoly plane_wave_series(const PadicNumber& pp, const PadicNumber& energy, const Rational& planck, int degree,
                           int precision = kDefaultPrecision);

/// (h/i) psi_t - (h^2/2m) psi_xx + V psi in the variables (t, x). For a
/// series truncated at total degree D only degrees <= D - 2 are meaningful,
/// so the residual is truncated there.
WavePoly schrodinger_residual(const WavePoly& psi, const WavePoly& potential, const PadicNumber& mass,
                              const Rational& planck);

/// T(alpha) = alpha sin(alpha) / (1 - cos(alpha)) by formal division; the
/// common factor alpha^2 cancels, so T(0) = 2.
analysis::Series interference_term(std::uint32_t prime, int degree, int precision = kDefaultPrecision);

}  // namespace padicmech::quantum
