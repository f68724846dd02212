#include "padicmech/quantum/spectrum.hpp"

#include "padicmech/errors.hpp"

namespace padicmech::quantum {

OscillatorSpectrum oscillator_spectrum(const BigInt& n, const PadicNumber& omega, const Rational& planck, int depth) {
  if (n < 0) throw InvalidArgument("level n must be >= 0");
  if (depth < 0) throw InvalidArgument("witness depth must be >= 0");
  const std::uint32_t p = omega.prime();
  const int k = std::max(1, omega.relative_precision());
  const PadicNumber h_omega = PadicNumber::from_rational(planck, p, k) * omega;
  auto level = [&](const BigInt& l) { return h_omega * PadicNumber::from_integer(l, p, k + depth + 1); };
  OscillatorSpectrum out{level(n), {}};
  for (int j = 1; j <= depth; ++j) {
    const BigInt l = n + ipow(BigInt(p), static_cast<unsigned>(j));
    const PadicNumber e = level(l);
    out.witnesses.push_back({l, e, (e - out.energy).norm()});
  }
  return out;
}

}  // namespace padicmech::quantum
