#include <gtest/gtest.h>

#include "convert.hpp"
#include "oracle.hpp"
#include "padicmech/analysis/elementary.hpp"
#include "padicmech/analysis/integral.hpp"
#include "padicmech/analysis/multi_poly.hpp"
#include "padicmech/analysis/pathology.hpp"
#include "padicmech/analysis/power_series.hpp"
#include "padicmech/analysis/series_text.hpp"
#include "padicmech/errors.hpp"

using namespace padicmech;
using namespace padicmech::analysis;
using testing_support::to_lib;

namespace {

PadicNumber num(long long v, std::uint32_t p, int K = kDefaultPrecision) { return PadicNumber::from_integer(v, p, K); }

/// x agrees with the oracle rational to min(x's absolute precision, n) digits,
/// and that overlap is at least `need` digits.
::testing::AssertionResult agrees(const PadicNumber& x, const oracle::Rat& r, int n, int need) {
  const int N = std::min(x.absolute_precision(), n);
  if (N < need) return ::testing::AssertionFailure() << "only " << N << " digits certified, need " << need;
  const auto R = PadicNumber::from_rational(to_lib(r), x.prime(), N + 8);
  const auto d = x - R;
  if (!d.is_zero() && d.order() < N) return ::testing::AssertionFailure() << "differs at digit " << d.order();
  return ::testing::AssertionSuccess();
}

bool all_coefficients_vanish(const Series& f, int up_to) {
  for (int n = 0; n <= std::min(up_to, f.degree()); ++n)
    if (!f.coeff(n).is_zero()) return false;
  return true;
}

}  // namespace

TEST(SeriesAlgebra, DeriveOfSquare) {
  const auto f = Series::from_rationals(5, 8, {0, 0, 1});
  const auto d = f.derive();
  EXPECT_EQ(d.degree(), 1);
  EXPECT_TRUE(d.coeff(0).is_zero());
  EXPECT_EQ(d.coeff(1), num(2, 5, 8));
}

TEST(SeriesAlgebra, ProductOfConjugates) {
  const auto f = Series::from_rationals(7, 8, {1, 1});
  const auto g = Series::from_rationals(7, 8, {1, -1});
  const auto h = f * g;
  EXPECT_EQ(h.degree(), 2);
  EXPECT_EQ(h.coeff(0), num(1, 7, 8));
  EXPECT_TRUE(h.coeff(1).is_zero());
  EXPECT_EQ(h.coeff(2), num(-1, 7, 8));
}

TEST(SeriesAlgebra, ExpComposedWithZeroIsOne) {
  const auto e = elementary(Elementary::Exp, 5, 24);
  const auto zero = Series::polynomial(5, 12, {PadicNumber::zero(5)});
  const auto c = e.compose(zero);
  EXPECT_EQ(c.evaluate(num(0, 5)).value, num(1, 5));
  for (int n = 1; n <= c.degree(); ++n) EXPECT_TRUE(c.coeff(n).is_zero());
}

TEST(SeriesAlgebra, ComposeRequiresVanishingConstantForTruncatedSeries) {
  const auto e = elementary(Elementary::Exp, 5, 10);
  EXPECT_THROW(e.compose(Series::from_rationals(5, 12, {1, 1})), DomainViolation);
}

TEST(SeriesAlgebra, DeriveInvertsAntiderivative) {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> cs;
    for (int n = 0; n < 12; ++n) cs.emplace_back(static_cast<long long>(rng.below(200)) - 100, static_cast<long long>(rng.below(20)) + 1);
    const auto f = Series::from_rationals(3, 16, cs);
    const auto F = f.antiderivative();
    EXPECT_TRUE(F.coeff(0).is_exact_zero());
    const auto back = F.derive();
    for (int n = 0; n <= f.degree(); ++n) EXPECT_TRUE(congruent(back.coeff(n), f.coeff(n))) << n;
  }
}

TEST(Elementary, RadiusAndConstantTerm) {
  EXPECT_EQ(convergence_valuation(2), 2);
  EXPECT_EQ(convergence_valuation(7), 1);
  const auto e = elementary(Elementary::Exp, 5, 24);
  EXPECT_EQ(e.radius().value(5), Rational(1, 5));
  EXPECT_EQ(e.evaluate(PadicNumber::zero(5)).value, num(1, 5));
  EXPECT_EQ(elementary(Elementary::Cos, 2, 24).radius().value(2), Rational(1, 4));
}

TEST(Elementary, OutsideRadiusIsDomainViolation) {
  const auto e = elementary(Elementary::Exp, 5, 24);
  EXPECT_THROW(e.evaluate(num(1, 5)), DomainViolation);
  EXPECT_THROW(e.evaluate(num(3, 5)), DomainViolation);
  try {
    e.evaluate(num(2, 5));
  } catch (const DomainViolation& v) {
    EXPECT_EQ(v.condition(), "|x|_p <= r");
  }
}

TEST(Elementary, SineKeepsNorm) {
  const auto s = elementary(Elementary::Sin, 5, 24);
  EXPECT_EQ(s.evaluate(num(5, 5)).value.norm().value(), Rational(1, 5));
}

TEST(Elementary, ExpOfPMatchesSeriesOracle) {
  const auto e = elementary(Elementary::Exp, 5, 24);
  const auto v = e.evaluate(num(5, 5)).value;
  // 1 + 5 + 25/2 mod 125.
  const oracle::Int m = 125;
  const oracle::Int expected = oracle::mod(1 + 5 + 25 * oracle::inverse(2, m), m);
  EXPECT_EQ(testing_support::residue(v, 3), expected);
  EXPECT_EQ(expected, oracle::residue(oracle::exp_sum(5, 60), 5, 3));
  EXPECT_TRUE(agrees(v, oracle::exp_sum(5, 80), 12, 12));
}

TEST(Elementary, FunctionalEquationAtPoints) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto e = elementary(Elementary::Exp, p, 24);
    oracle::Rng rng(p * 17);
    for (int i = 0; i < 40; ++i) {
      const auto x = num(static_cast<long long>(p * (1 + rng.below(400))), p);
      const auto y = num(static_cast<long long>(p * (1 + rng.below(400))), p);
      const auto lhs = e.evaluate(x + y).value;
      const auto rhs = e.evaluate(x).value * e.evaluate(y).value;
      EXPECT_TRUE(congruent(lhs, rhs));
      EXPECT_GE(std::min(lhs.absolute_precision(), rhs.absolute_precision()), 4);
    }
  }
}

TEST(Elementary, FunctionalEquationMatchesOracleAtFive) {
  const auto e = elementary(Elementary::Exp, 5, 24);
  const auto lhs = e.evaluate(num(10, 5)).value;
  const auto rhs = e.evaluate(num(5, 5)).value * e.evaluate(num(5, 5)).value;
  const oracle::Rat truth = oracle::exp_sum(10, 90);
  EXPECT_TRUE(agrees(lhs, truth, 4, 4));
  EXPECT_TRUE(agrees(rhs, truth, 4, 4));
}

TEST(Elementary, SeriesIdentitiesAsCoefficients) {
  // exp(x)exp(y) vs exp(x+y) as a bivariate identity, and sin^2 + cos^2 = 1.
  const std::uint32_t p = 5;
  const int D = 24;
  const auto exp1 = elementary(Elementary::Exp, p, D);
  const auto Ex = Poly::from_series(exp1.with_tail(ExactTail{}));
  const auto X = Poly::variable(p, 2, 0, 12), Y = Poly::variable(p, 2, 1, 12);
  const auto one_var = [&](const Poly& f, int i) {
    const auto v = Poly::variable(p, 2, i, 12);
    return f.substitute({v});
  };
  const auto lhs = Ex.substitute({X + Y}).truncated(D);
  const auto rhs = (one_var(Ex, 0) * one_var(Ex, 1)).truncated(D);
  const auto diff = lhs - rhs;
  for (const auto& [e, c] : diff.terms()) EXPECT_TRUE(c.is_zero());

  const auto s = elementary(Elementary::Sin, p, D), c = elementary(Elementary::Cos, p, D);
  const auto pyth = s * s + c * c - Series::from_rationals(p, 12, {1});
  EXPECT_TRUE(all_coefficients_vanish(pyth, D));
}

TEST(Elementary, SineAndCosineNormsAtSampledPoints) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const auto s = elementary(Elementary::Sin, p, 24), c = elementary(Elementary::Cos, p, 24);
    oracle::Rng rng(p);
    for (int i = 0; i < 60; ++i) {
      const int k = 1 + static_cast<int>(rng.below(3));
      const auto a = num(static_cast<long long>(1 + rng.below(p - 1)) * static_cast<long long>(oracle::power(p, k)), p);
      EXPECT_EQ(s.evaluate(a).value.norm(), a.norm());
      const auto cm1 = c.evaluate(a).value - num(1, p);
      EXPECT_LE(cm1.norm(), a.norm().pow(2));
    }
  }
}

TEST(Elementary, SineCosineMatchOracle) {
  const auto s = elementary(Elementary::Sin, 7, 24), c = elementary(Elementary::Cos, 7, 24);
  EXPECT_TRUE(agrees(s.evaluate(num(7, 7)).value, oracle::sin_sum(7, 61), 12, 10));
  EXPECT_TRUE(agrees(c.evaluate(num(14, 7)).value, oracle::cos_sum(14, 60), 12, 10));
}

TEST(Evaluate, PolynomialAtIntegerPoint) {
  const auto f = Series::from_rationals(5, 6, {1, 0, 1});
  const auto v = f.evaluate(num(2, 5, 6));
  EXPECT_TRUE(v.certified);
  EXPECT_EQ(v.value.valuation(), 1);
  EXPECT_EQ(v.value.residue(2), 5);
}

TEST(Integral, Examples) {
  const std::uint32_t p = 5;
  const auto t = num(3, p);
  const auto one = Series::from_rationals(p, 12, {1});
  EXPECT_EQ(definite_integral(one, PadicNumber::zero(p), t, 12).value, t);

  const auto x = Series::from_rationals(p, 12, {0, 1});
  const auto b = num(4, p);
  EXPECT_TRUE(congruent(definite_integral(x, PadicNumber::zero(p), b, 12).value, num(8, p)));
}

TEST(Integral, ExpFromZeroToP) {
  const auto e = elementary(Elementary::Exp, 5, 24);
  const auto r = definite_integral(e, PadicNumber::zero(5), num(5, 5), 12);
  EXPECT_TRUE(r.certified);
  EXPECT_TRUE(agrees(r.value, oracle::exp_sum(5, 80) - 1, 3, 3));
  EXPECT_EQ(testing_support::residue(r.value, 3), oracle::residue(oracle::exp_sum(5, 80) - 1, 5, 3));
}

TEST(Integral, DivisionsByMultiplesOfPCostDigits) {
  // int_0^b x^4 dx = b^5/5 over Q_5: the quotient by 5 is visible in the loss.
  const auto f = Series::from_rationals(5, 6, {0, 0, 0, 0, 1});
  const auto r = definite_integral(f, PadicNumber::zero(5), num(1, 5, 6), 6);
  EXPECT_GT(r.precision_loss, 0);
  EXPECT_EQ(r.value.valuation(), -1);
}

TEST(Integral, EndpointsOutsideTheBallAreRejected) {
  const auto e = elementary(Elementary::Exp, 5, 24);
  EXPECT_THROW(definite_integral(e, PadicNumber::zero(5), num(1, 5), 12), DomainViolation);
}

TEST(Pathology, Examples) {
  const auto z = PadicInt::from_integer(0, 5, 6);
  EXPECT_TRUE(pathological_eval(z).is_zero());
  const auto f = pathological_eval(PadicInt::from_integer(5, 5, 6));
  EXPECT_EQ(f.precision(), 12);
  EXPECT_EQ(f.residue(), 25);
}

TEST(Pathology, SquaresDistances) {
  oracle::Rng rng(2024);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    const int K = 8;
    const oracle::Int M = oracle::power(p, K);
    for (int i = 0; i < 200; ++i) {
      const auto x = PadicInt::from_integer(to_lib(rng.below(M)), p, K);
      const auto y = PadicInt::from_integer(to_lib(rng.below(M)), p, K);
      const auto dx = (x - y).valuation();
      const auto df = (pathological_eval(x) - pathological_eval(y)).valuation();
      if (!dx) {
        EXPECT_FALSE(df);
      } else {
        ASSERT_TRUE(df);
        EXPECT_EQ(*df, 2 * *dx);
      }
    }
  }
}

TEST(SupNorm, Examples) {
  const auto V = Series::from_rationals(3, 12, {0, -1, 0, 1});
  const auto r = sup_norm_probe(V, 2);
  EXPECT_EQ(r.points, 9u);
  EXPECT_EQ(r.lower, Rational(1, 3));
  ASSERT_TRUE(r.upper);
  EXPECT_EQ(*r.upper, Rational(1, 3));

  EXPECT_EQ(sup_norm_probe(Series::from_rationals(3, 12, {1}), 2).lower, 1);
  const auto px = sup_norm_probe(Series::from_rationals(5, 12, {0, 5}), 1);
  EXPECT_EQ(px.lower, Rational(1, 5));
}

TEST(SupNorm, FermatPolynomialStaysSmallAtEveryDepth) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    std::vector<Rational> cs(p + 1, 0);
    cs[1] = -1;
    cs[p] = 1;
    const auto V = Series::from_rationals(p, 12, cs);
    for (int depth = 1; depth <= 3; ++depth) {
      const auto r = sup_norm_probe(V, depth);
      ASSERT_TRUE(r.upper);
      EXPECT_LE(*r.upper, Rational(1, p));
    }
  }
}

TEST(SupNorm, CapGuardsBlowup) {
  EXPECT_THROW(sup_norm_probe(Series::from_rationals(7, 12, {1}), 8, 1000), InvalidArgument);
}

TEST(SeriesText, RoundTrip) {
  const auto f = Series::from_rationals(5, 6, {1, Rational(1, 5), 0, -3});
  const auto g = parse_series(format(f), 6);
  ASSERT_EQ(g.degree(), f.degree());
  for (int n = 0; n <= f.degree(); ++n) EXPECT_EQ(g.coeff(n), f.coeff(n));
}
