#include <gtest/gtest.h>

#include <algorithm>

#include "convert.hpp"
#include "oracle.hpp"
#include "padicmech/analysis/elementary.hpp"
#include "padicmech/errors.hpp"
#include "padicmech/quantum/complex.hpp"
#include "padicmech/quantum/hilbert.hpp"
#include "padicmech/quantum/probabilities.hpp"
#include "padicmech/quantum/spectrum.hpp"
#include "padicmech/quantum/wave.hpp"

using namespace padicmech;
using namespace padicmech::quantum;
using testing_support::to_lib;

namespace {

constexpr int K = kDefaultPrecision;

PadicNumber num(long long v, std::uint32_t p, int k = K) { return PadicNumber::from_integer(v, p, k); }
PadicComplex cx(long long a, long long b, std::uint32_t p) { return {num(a, p), num(b, p)}; }

/// Formal quotient a/b of rational series, b starting at index m.
std::vector<oracle::Rat> divide(std::vector<oracle::Rat> a, const std::vector<oracle::Rat>& b, int m, int D) {
  std::vector<oracle::Rat> q(static_cast<std::size_t>(D + 1), 0);
  for (int n = 0; n <= D; ++n) {
    oracle::Rat acc = a[static_cast<std::size_t>(n + m)];
    for (int k = 1; k <= n; ++k) acc -= b[static_cast<std::size_t>(k + m)] * q[static_cast<std::size_t>(n - k)];
    q[static_cast<std::size_t>(n)] = acc / b[static_cast<std::size_t>(m)];
  }
  return q;
}

}  // namespace

TEST(Complex, Examples) {
  const auto z = cx(3, 4, 7);
  EXPECT_EQ(z.modulus_sq(), num(25, 7));
  EXPECT_EQ(z.conj().conj(), z);
  EXPECT_THROW(cx(1, 1, 5), ExtensionUndefined);
  EXPECT_THROW(require_extension(2), ExtensionUndefined);
}

TEST(Complex, FieldOperations) {
  oracle::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto a = cx(static_cast<long long>(rng.below(1000)) - 500, static_cast<long long>(rng.below(1000)) - 500, 11);
    const auto b = cx(static_cast<long long>(rng.below(1000)) + 1, static_cast<long long>(rng.below(1000)), 11);
    EXPECT_TRUE(congruent((a * b) / b, a));
    EXPECT_TRUE(congruent(PadicComplex((a * a.conj()).re()), a * a.conj()));
    EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
  }
}

TEST(Gaussian, ParseAndPrint) {
  for (const char* s : {"3/5", "1+2i", "-i", "2/3i", "-1/2-3/4i"}) {
    const auto z = parse_gaussian(s);
    EXPECT_EQ(parse_gaussian(to_string(z)), z) << s;
  }
  EXPECT_EQ(parse_gaussian("-i"), (GaussianRational{0, -1}));
  EXPECT_THROW(parse_gaussian("1+"), ParseError);
}

TEST(Hilbert, BasisVectors) {
  const std::uint32_t p = 7;
  const HilbertVector e1({num(1, p), num(0, p)}), e2({num(0, p), num(1, p)});
  EXPECT_TRUE(inner(e1, e2).is_zero());
  const auto r = inner_and_schwarz(e1, e1);
  EXPECT_EQ(r.product, PadicComplex(num(1, p)));
  EXPECT_TRUE(r.schwarz_ok);
  EXPECT_THROW(inner(e1, HilbertVector({num(1, p)})), DimensionMismatch);
}

TEST(Hilbert, SchwarzOnRandomVectors) {
  const std::uint32_t p = 7;
  oracle::Rng rng(1234);
  auto random_entry = [&] {
    const auto a = PadicNumber::from_rational(Rational(static_cast<long long>(rng.below(2000)) - 1000,
                                                       static_cast<long long>(rng.below(49)) + 1),
                                              p, K);
    const auto b = PadicNumber::from_integer(static_cast<long long>(rng.below(2000)) - 1000, p, K);
    return PadicComplex(a, b);
  };
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng.below(5);
    std::vector<PadicComplex> x, y;
    for (std::size_t j = 0; j < n; ++j) {
      x.push_back(random_entry());
      y.push_back(random_entry());
    }
    EXPECT_TRUE(inner_and_schwarz(HilbertVector(x), HilbertVector(y)).schwarz_ok);
  }
}

TEST(Hilbert, InnerProductIsSymmetricBilinear) {
  const std::uint32_t p = 3;
  const HilbertVector x({cx(1, 2, p), cx(0, 5, p)}), y({cx(4, -1, p), cx(2, 2, p)});
  EXPECT_EQ(inner(x, y), inner(y, x));
  const HilbertVector ix({cx(1, 2, p) * PadicComplex::i(p, K), cx(0, 5, p) * PadicComplex::i(p, K)});
  EXPECT_TRUE(congruent(inner(ix, y), PadicComplex::i(p, K) * inner(x, y)));
}

TEST(Hilbert, SymmetricOperatorEigenvectorsAreOrthogonal) {
  const std::uint32_t p = 7;
  const auto z = PadicComplex(PadicNumber::zero(p));
  const Matrix diag{{cx(2, 0, p), z, z}, {z, cx(5, 1, p), z}, {z, z, cx(-3, 0, p)}};
  const SymmetricOperator A(diag);
  std::vector<HilbertVector> eig;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<PadicComplex> e(3, z);
    e[i] = cx(1, 0, p);
    eig.emplace_back(e);
    EXPECT_TRUE(A.is_eigenpair(eig.back(), diag[i][i]));
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) EXPECT_TRUE(inner(eig[i], eig[j]).is_zero());
  EXPECT_THROW(SymmetricOperator({{cx(1, 0, p), cx(1, 0, p)}, {cx(2, 0, p), cx(1, 0, p)}}), InvalidArgument);
}

TEST(MixedState, PythagoreanWeights) {
  const auto r = mixed_state_probabilities({parse_gaussian("3/5"), parse_gaussian("4/5")}, Weighting::Bilinear);
  EXPECT_EQ(r.weights[0], (GaussianRational{Rational(9, 25), 0}));
  EXPECT_EQ(r.weights[1], (GaussianRational{Rational(16, 25), 0}));
  EXPECT_TRUE(r.normalized);
  EXPECT_TRUE(r.real_interpretable);
}

TEST(MixedState, PointMass) {
  const auto r = mixed_state_probabilities({{1, 0}, {0, 0}, {0, 0}}, Weighting::Conjugate);
  EXPECT_EQ(r.weights[0].re, 1);
  EXPECT_EQ(r.weights[1].re, 0);
}

TEST(MixedState, DeficitIsReported) {
  try {
    mixed_state_probabilities({{Rational(1, 2), 0}, {Rational(1, 2), 0}}, Weighting::Bilinear);
    ADD_FAILURE();
  } catch (const NotNormalized& e) {
    EXPECT_EQ(e.deficit(), (GaussianRational{Rational(1, 2), 0}));
  }
}

TEST(MixedState, NormalizedButNotRealInterpretable) {
  // Search (a/c, i b/c) with a^2 - b^2 = c^2 and a > c: sum q^2 = 1 with q_1^2 > 1.
  int found = 0;
  for (int c = 1; c <= 12; ++c) {
    for (int a = c + 1; a <= 4 * c; ++a) {
      for (int b = 1; b < a; ++b) {
        if (a * a - b * b != c * c) continue;
        const GaussianRational q1{Rational(a, c), 0}, q2{0, Rational(b, c)};
        const auto r = mixed_state_probabilities({q1, q2}, Weighting::Bilinear);
        EXPECT_TRUE(r.normalized);
        EXPECT_FALSE(r.real_interpretable);
        EXPECT_GT(r.weights[0].re, 1);
        EXPECT_LT(r.weights[1].re, 0);
        ++found;
      }
    }
  }
  EXPECT_GT(found, 0);
}

TEST(PlaneWave, Origin) {
  const std::uint32_t p = 7;
  const auto w = plane_wave(num(3, p), num(5, p), PadicNumber::zero(p), PadicNumber::zero(p), default_planck(p));
  EXPECT_EQ(w.value, PadicComplex(num(1, p)));
}

TEST(PlaneWave, UnitModulusAndSineNorm) {
  const std::uint32_t p = 7;
  oracle::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto pp = num(static_cast<long long>(rng.below(100)) + 1, p), E = num(static_cast<long long>(rng.below(100)), p);
    const auto t = num(static_cast<long long>(rng.below(1'000'000)), p), x = num(static_cast<long long>(rng.below(1'000'000)), p);
    const auto w = plane_wave(pp, E, t, x, default_planck(p));
    const auto m = w.value.modulus_sq() - num(1, p);
    EXPECT_GE(m.order(), 8);
    if (!w.phase.is_zero()) EXPECT_EQ(w.value.im().norm(), w.phase.norm());
  }
}

TEST(PlaneWave, SeriesHasUnitModulus) {
  const std::uint32_t p = 3;
  const int D = 10;
  const auto psi = plane_wave_series(num(2, p), num(1, p), default_planck(p), D);
  WavePoly conj(p, 2, K, D);
  for (const auto& [e, c] : psi.terms()) conj.add_term(e, c.conj());
  const auto prod = (psi * conj).truncated(D);
  for (const auto& [e, c] : prod.terms()) {
    if (e == std::vector<int>{0, 0}) {
      EXPECT_TRUE(congruent(c, PadicComplex(num(1, p))));
    } else {
      EXPECT_TRUE(c.is_zero());
    }
  }
}

TEST(PlaneWave, TwoAdicDefaultsViolateTheDomain) {
  const std::uint32_t p = 2;
  try {
    plane_wave(num(1, p), num(0, p), PadicNumber::zero(p), num(1, p), default_planck(p));
    ADD_FAILURE();
  } catch (const DomainViolation& v) {
    EXPECT_EQ(v.condition(), "|(p x - E t)/h_p|_p <= r_p");
  }
}

TEST(Schrodinger, FreePlaneWaveSolves) {
  for (std::uint32_t p : {3u, 7u, 11u}) {
    const auto pp = num(2, p), m = num(5, p);
    const auto E = pp * pp / (num(2, p) * m);
    const auto psi = plane_wave_series(pp, E, default_planck(p), 12);
    const auto r = schrodinger_residual(psi, WavePoly(p, 2, K), m, default_planck(p));
    EXPECT_EQ(r.max_degree(), 10);
    for (const auto& [e, c] : r.terms()) EXPECT_TRUE(c.is_zero());
  }
}

TEST(Schrodinger, ConstantSolves) {
  const std::uint32_t p = 7;
  const auto one = WavePoly::constant(PadicComplex(num(1, p)), 2, K).truncated(6);
  const auto r = schrodinger_residual(one, WavePoly(p, 2, K), num(1, p), default_planck(p));
  EXPECT_TRUE(r.is_zero() || std::all_of(r.terms().begin(), r.terms().end(), [](const auto& t) { return t.second.is_zero(); }));
}

TEST(Schrodinger, WrongEnergyLeavesProportionalResidual) {
  const std::uint32_t p = 7;
  const auto pp = num(3, p), m = num(2, p);
  const auto E0 = pp * pp / (num(2, p) * m);
  for (long long k = 0; k <= 3; ++k) {
    const auto delta = num(static_cast<long long>(oracle::power(p, static_cast<unsigned>(k))), p);
    const auto psi = plane_wave_series(pp, E0 + delta, default_planck(p), 8);
    const auto r = schrodinger_residual(psi, WavePoly(p, 2, K), m, default_planck(p));
    // (h/i) d/dt psi contributes -delta psi; the constant term is -delta.
    EXPECT_TRUE(congruent(r.coeff({0, 0}), PadicComplex(-delta)));
    EXPECT_EQ(r.coeff({0, 0}).norm(), delta.norm());
  }
}

TEST(Interference, IdentityParityAndConstant) {
  for (std::uint32_t p : {3u, 7u}) {
    const int D = 20;
    const auto T = interference_term(p, D);
    EXPECT_TRUE(congruent(T.coeff(0), num(2, p)));
    for (int n = 1; n <= D; n += 2) EXPECT_TRUE(T.coeff(n).is_zero()) << n;

    // Rational-series division oracle.
    std::vector<oracle::Rat> num_s(D + 3, 0), den(D + 3, 0);
    for (int n = 1; n + 1 <= D + 2; n += 2) num_s[n + 1] = oracle::Rat((n / 2) % 2 ? -1 : 1) / oracle::Rat(oracle::factorial(n));
    for (int n = 2; n <= D + 2; n += 2) den[n] = oracle::Rat((n / 2) % 2 ? 1 : -1) / oracle::Rat(oracle::factorial(n));
    const auto q = divide(num_s, den, 2, D);
    EXPECT_EQ(q[0], 2);
    for (int n = 0; n <= D; ++n) {
      const auto expected = PadicNumber::from_rational(to_lib(q[n]), p, K + 10);
      EXPECT_TRUE(congruent(T.coeff(n), expected)) << "p=" << p << " n=" << n;
    }

    const auto alpha = analysis::Series::variable(p, K);
    const auto one = analysis::Series::from_rationals(p, K, {1});
    const auto sin = analysis::elementary(analysis::Elementary::Sin, p, D + 2);
    const auto cos = analysis::elementary(analysis::Elementary::Cos, p, D + 2);
    const auto lhs = ((one - cos) * T).truncated(D);
    const auto rhs = (alpha * sin).truncated(D);
    for (int n = 0; n <= D; ++n) EXPECT_TRUE(congruent(lhs.coeff_or_zero(n), rhs.coeff_or_zero(n))) << n;
  }
}

TEST(Oscillator, Examples) {
  EXPECT_TRUE(oscillator_spectrum(0, num(1, 5), Rational(1, 5), 3).energy.is_zero());
  const auto s = oscillator_spectrum(1, num(1, 5), Rational(1, 5), 6);
  EXPECT_EQ(s.energy, PadicNumber::from_rational(Rational(1, 5), 5, K));
  ASSERT_EQ(s.witnesses.size(), 6u);
  for (int k = 1; k <= 6; ++k) {
    const auto& w = s.witnesses[static_cast<std::size_t>(k - 1)];
    EXPECT_NE(w.index, 1);
    EXPECT_EQ(w.distance.value(), rpow(Rational(5), 1 - k));
  }
}

TEST(Rebasis, Examples) {
  const std::vector<std::vector<GaussianRational>> canonical{{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}};
  const std::vector<GaussianRational> phi{{Rational(3, 5), 0}, {Rational(4, 5), 0}};
  auto r = rebasis_probabilities(phi, canonical);
  EXPECT_EQ(r.weights, (std::vector<Rational>{Rational(9, 25), Rational(16, 25)}));

  const std::vector<std::vector<GaussianRational>> rotated{{{Rational(3, 5), 0}, {Rational(4, 5), 0}},
                                                          {{Rational(-4, 5), 0}, {Rational(3, 5), 0}}};
  r = rebasis_probabilities(rotated[0], rotated);
  EXPECT_EQ(r.weights, (std::vector<Rational>{1, 0}));

  const std::vector<GaussianRational> psi{{Rational(5, 13), 0}, {Rational(12, 13), 0}};
  r = rebasis_probabilities(psi, rotated);
  EXPECT_EQ(r.total, 1);
  EXPECT_EQ(r.total, r.canonical_total);

  EXPECT_THROW(rebasis_probabilities(phi, {{{1, 0}, {1, 0}}, {{0, 0}, {1, 0}}}), InvalidArgument);
}
