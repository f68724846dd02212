#pragma once

#include <vector>

#include "padicmech/norm.hpp"
#include "padicmech/padic_number.hpp"

namespace padicmech::quantum {

struct SpectrumWitness {
  BigInt index;        ///< l_k = n + p^k
  PadicNumber energy;  ///< E_{l_k}
  Norm distance;       ///< |E_{l_k} - E_n|_p = |h omega|_p p^-k
};

struct OscillatorSpectrum {
  PadicNumber energy;  ///< E_n = h omega n
  std::vector<SpectrumWitness> witnesses;
};

/// E_n = h_p omega n, and the levels l_k = n + p^k (k = 1..depth) whose
/// energies accumulate at E_n p-adically.
OscillatorSpectrum oscillator_spectrum(const BigInt& n, const PadicNumber& omega, const Rational& planck, int depth);

}  // namespace padicmech::quantum
