#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "padicmech/analysis/tail.hpp"
#include "padicmech/errors.hpp"
#include "padicmech/padic_number.hpp"

namespace padicmech::analysis {

/// Scalars a series can carry: PadicNumber, and PadicComplex (constructible
/// from PadicNumber). Both expose prime(), order(), is_zero(),
/// is_exact_zero(), absolute_precision() and with_absolute_cap().
template <class R>
concept SeriesScalar = requires(const R& r, const PadicNumber& x) {
  R{x};
  { r.prime() } -> std::convertible_to<std::uint32_t>;
  { r.order() } -> std::convertible_to<int>;
  { r.is_zero() } -> std::convertible_to<bool>;
  { r.is_exact_zero() } -> std::convertible_to<bool>;
  { r.absolute_precision() } -> std::convertible_to<int>;
  { r.with_absolute_cap(0) } -> std::convertible_to<R>;
  r + r;
  r - r;
  r * r;
  r / r;
  -r;
};

template <class R>
struct Evaluation {
  R value;
  /// Lower bound on v(c_n x^n) over the unstored terms; empty when the tail is
  /// exact (nothing to bound) or uncertified.
  std::optional<Rational> tail_order;
  /// False when the tail is unknown or does not provably shrink at x.
  bool certified;
};

/// A truncated power series sum_{n<=D} c_n x^n together with a certificate
/// about the coefficients past D (see Tail) and the domain on which it may be
/// evaluated.
///
/// `precision` is the relative precision used for constants the series
/// manufactures (1, n+1, rational coefficients); it does not cap the
/// coefficients themselves, which carry their own precision.
template <SeriesScalar R>
class PowerSeries {
 public:
  PowerSeries(std::uint32_t prime, int precision, std::vector<R> coeffs, Tail tail, Radius radius)
      : prime_(prime), precision_(precision), coeffs_(std::move(coeffs)), tail_(std::move(tail)),
        radius_(radius) {
    require_prime(prime_);
    if (coeffs_.empty()) coeffs_.push_back(R{PadicNumber::zero(prime_)});
    for (const auto& c : coeffs_) {
      if (c.prime() != prime_) throw PrimeMismatch("series coefficient over the wrong prime");
    }
  }

  /// Exact polynomial, valid everywhere.
  static PowerSeries polynomial(std::uint32_t prime, int precision, std::vector<R> coeffs) {
    return PowerSeries(prime, precision, std::move(coeffs), ExactTail{}, Radius::entire());
  }
  static PowerSeries from_rationals(std::uint32_t prime, int precision, const std::vector<Rational>& coeffs) {
    std::vector<R> cs;
    cs.reserve(coeffs.size());
    for (const auto& q : coeffs) cs.push_back(R{PadicNumber::from_rational(q, prime, precision)});
    return polynomial(prime, precision, std::move(cs));
  }
  static PowerSeries constant(const R& c, int precision) {
    return polynomial(c.prime(), precision, {c});
  }
  /// The identity series x.
  static PowerSeries variable(std::uint32_t prime, int precision) {
    return from_rationals(prime, precision, {0, 1});
  }

  std::uint32_t prime() const noexcept { return prime_; }
  int precision() const noexcept { return precision_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<R>& coeffs() const noexcept { return coeffs_; }
  const R& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  /// c_n for any n: stored value, an exact zero past an exact tail.
  R coeff_or_zero(int n) const {
    if (n <= degree()) return coeff(n);
    if (!is_exact()) throw PrecisionError("coefficient " + std::to_string(n) + " lies past the truncation");
    return zero();
  }
  const Tail& tail() const noexcept { return tail_; }
  const Radius& radius() const noexcept { return radius_; }
  bool is_exact() const noexcept { return std::holds_alternative<ExactTail>(tail_); }

  PowerSeries with_radius(Radius r) const {
    PowerSeries out = *this;
    out.radius_ = r;
    return out;
  }
  PowerSeries with_tail(Tail t) const {
    PowerSeries out = *this;
    out.tail_ = std::move(t);
    return out;
  }

  /// Keeps c_0..c_D. Dropping stored nonzero coefficients of an exact series
  /// turns the tail into a bound that covers them.
  PowerSeries truncated(int D) const {
    if (D < 0) throw InvalidArgument("truncation degree must be >= 0");
    if (D >= degree()) return *this;
    Tail t = tail_;
    if (is_exact()) {
      bool dropped_nonzero = false;
      for (int n = D + 1; n <= degree(); ++n) dropped_nonzero |= !coeff(n).is_exact_zero();
      if (dropped_nonzero) t = as_bounded(Rational(0));
    }
    return PowerSeries(prime_, precision_, {coeffs_.begin(), coeffs_.begin() + D + 1}, t, radius_);
  }

  /// The bound an exact series satisfies with the given slope.
  BoundedTail as_bounded(const Rational& slope) const {
    if (const auto* b = std::get_if<BoundedTail>(&tail_)) return *b;
    if (!is_exact()) throw InvalidArgument("an unknown tail has no bound");
    std::optional<Rational> offset;
    for (int n = 0; n <= degree(); ++n) {
      if (coeff(n).is_exact_zero()) continue;
      const Rational o = -Rational(coeff(n).order()) - slope * n;
      if (!offset || o > *offset) offset = o;
    }
    return {slope, offset.value_or(Rational(0)), Rational(0)};
  }

  PowerSeries operator-() const {
    std::vector<R> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(-c);
    return PowerSeries(prime_, precision_, std::move(cs), tail_, radius_);
  }

  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    f.check_compatible(g);
    const int D = combined_degree_add(f, g);
    std::vector<R> cs;
    cs.reserve(static_cast<std::size_t>(D + 1));
    for (int n = 0; n <= D; ++n) {
      const R a = n <= f.degree() ? f.coeff(n) : f.zero();
      const R b = n <= g.degree() ? g.coeff(n) : g.zero();
      cs.push_back(a + b);
    }
    return PowerSeries(f.prime_, std::min(f.precision_, g.precision_), std::move(cs), combine_tails(f, g, false),
                       intersect(f.radius_, g.radius_));
  }
  friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return f + (-g); }

  friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    f.check_compatible(g);
    int D;
    if (f.is_exact() && g.is_exact()) {
      D = f.degree() + g.degree();
    } else if (f.is_exact()) {
      D = g.degree();
    } else if (g.is_exact()) {
      D = f.degree();
    } else {
      D = std::min(f.degree(), g.degree());
    }
    std::vector<R> cs(static_cast<std::size_t>(D + 1), f.zero());
    for (int i = 0; i <= std::min(D, f.degree()); ++i) {
      if (f.coeff(i).is_exact_zero()) continue;
      for (int j = 0; j <= std::min(D - i, g.degree()); ++j) {
        if (g.coeff(j).is_exact_zero()) continue;
        cs[static_cast<std::size_t>(i + j)] = cs[static_cast<std::size_t>(i + j)] + f.coeff(i) * g.coeff(j);
      }
    }
    return PowerSeries(f.prime_, std::min(f.precision_, g.precision_), std::move(cs), combine_tails(f, g, true),
                       intersect(f.radius_, g.radius_));
  }

  /// c * f.
  PowerSeries scaled_by(const R& c) const {
    if (c.prime() != prime_) throw PrimeMismatch("scalar over the wrong prime");
    if (c.is_exact_zero()) return polynomial(prime_, precision_, {zero()});
    std::vector<R> cs;
    cs.reserve(coeffs_.size());
    for (const auto& a : coeffs_) cs.push_back(c * a);
    Tail t = tail_;
    if (auto* b = std::get_if<BoundedTail>(&t)) b->offset -= c.order();
    return PowerSeries(prime_, precision_, std::move(cs), t, radius_);
  }

  /// x -> f(a x).
  PowerSeries substitute_scaled(const R& a) const {
    if (a.prime() != prime_) throw PrimeMismatch("scalar over the wrong prime");
    if (a.is_zero()) throw InvalidArgument("f(a x) needs a nonzero a");
    std::vector<R> cs;
    cs.reserve(coeffs_.size());
    R power = one();
    for (const auto& c : coeffs_) {
      cs.push_back(c * power);
      power = power * a;
    }
    Tail t = tail_;
    if (auto* b = std::get_if<BoundedTail>(&t)) b->slope -= a.order();
    Radius r = radius_;
    if (r.min_valuation) *r.min_valuation -= a.order();
    return PowerSeries(prime_, precision_, std::move(cs), t, r);
  }

  /// Formal derivative. The top stored coefficient is lost unless the tail is exact.
  PowerSeries derive() const {
    std::vector<R> cs;
    const int top = is_exact() ? degree() : degree() - 1;
    for (int n = 1; n <= std::max(top, 0); ++n) {
      if (n > degree()) break;
      cs.push_back(coeff(n) * integer(n));
    }
    if (cs.empty()) cs.push_back(zero());
    Tail t = tail_;
    if (auto* b = std::get_if<BoundedTail>(&t)) t = tail_derive(*b);
    return PowerSeries(prime_, precision_, std::move(cs), t, radius_);
  }

  /// F with F(0) = 0 and F' = f; c_n/(n+1) may lose v_p(n+1) digits.
  PowerSeries antiderivative() const {
    std::vector<R> cs;
    cs.reserve(coeffs_.size() + 1);
    cs.push_back(R{PadicNumber::zero(prime_)});
    for (int n = 0; n <= degree(); ++n) cs.push_back(coeff(n) / integer(n + 1));
    Tail t = tail_;
    if (auto* b = std::get_if<BoundedTail>(&t)) t = tail_antiderivative(*b);
    return PowerSeries(prime_, precision_, std::move(cs), t, radius_);
  }

  /// f(g(x)). A polynomial f composes with anything by Horner's rule in the
  /// series ring. A genuine series f needs g(0) = 0; its tail is certified
  /// only when g is a polynomial.
  PowerSeries compose(const PowerSeries& g) const {
    check_compatible(g);
    if (is_exact()) {
      PowerSeries acc = constant(coeff(degree()), precision_);
      for (int n = degree() - 1; n >= 0; --n) acc = acc * g + constant(coeff(n), precision_);
      return acc;
    }
    if (!g.coeff(0).is_exact_zero()) {
      throw DomainViolation("g(0) = 0", "composing a truncated series requires an inner series without constant term");
    }
    const int D = g.is_exact() ? degree() : std::min(degree(), g.degree());
    const PowerSeries inner = g.truncated(std::max(g.is_exact() ? g.degree() : D, 1));
    PowerSeries acc = constant(coeff(D), precision_);
    for (int n = D - 1; n >= 0; --n) acc = (acc * inner).truncated(D) + constant(coeff(n), precision_);
    acc = acc.truncated(D);

    std::optional<int> w;
    for (int k = 1; k <= g.degree(); ++k) {
      if (g.coeff(k).is_exact_zero()) continue;
      w = w ? std::min(*w, g.coeff(k).order()) : g.coeff(k).order();
    }
    if (!w) return constant(coeff(0), precision_);
    Tail t = UnknownTail{};
    if (g.is_exact()) {
      if (const auto* b = std::get_if<BoundedTail>(&tail_)) {
        t = BoundedTail{std::max(Rational(0), b->slope - *w), b->offset, b->log_weight};
      }
    }
    Radius r = g.radius_;
    if (radius_.min_valuation) {
      const int need = *radius_.min_valuation - *w;
      const bool linear = g.is_exact() && g.degree() <= 1;
      r = intersect(r, Radius::at_least(linear ? need : std::max(need, 0)));
    }
    return PowerSeries(prime_, precision_, std::move(acc.coeffs_), t, r);
  }

  /// f / g as formal series. Leading zero coefficients are cancelled: g must
  /// start at index m with f_0..f_{m-1} vanishing. The result tail is unknown.
  PowerSeries divided_by(const PowerSeries& g) const {
    check_compatible(g);
    int m = 0;
    while (m <= g.degree() && g.coeff(m).is_zero()) ++m;
    if (m > g.degree()) throw DivisionByZero("series division by a series with no nonzero coefficient");
    for (int i = 0; i < m; ++i) {
      if (i > degree() || !coeff(i).is_zero()) {
        throw DivisionByZero("numerator does not vanish to the order of the denominator");
      }
    }
    const int Df = is_exact() ? std::numeric_limits<int>::max() : degree();
    const int Dg = g.is_exact() ? std::numeric_limits<int>::max() : g.degree();
    int D = std::min(Df, Dg);
    if (D == std::numeric_limits<int>::max()) D = std::max(degree(), g.degree());
    D -= m;
    if (D < 0) throw PrecisionError("not enough stored terms to divide");
    std::vector<R> num(static_cast<std::size_t>(D + 1), zero());
    for (int i = 0; i <= D && i + m <= degree(); ++i) num[static_cast<std::size_t>(i)] = coeff(i + m);
    std::vector<R> out(static_cast<std::size_t>(D + 1), zero());
    const R lead = g.coeff(m);
    for (int n = 0; n <= D; ++n) {
      R acc = num[static_cast<std::size_t>(n)];
      for (int k = 1; k <= n && k + m <= g.degree(); ++k) {
        acc = acc - g.coeff(k + m) * out[static_cast<std::size_t>(n - k)];
      }
      out[static_cast<std::size_t>(n)] = acc / lead;
    }
    return PowerSeries(prime_, std::min(precision_, g.precision_), std::move(out), UnknownTail{},
                       intersect(radius_, g.radius_));
  }

  /// Partial sum at x with a certificate for the neglected tail. The value's
  /// absolute precision is capped by the tail bound so no uncertified digit
  /// is reported.
  Evaluation<R> evaluate(const R& x) const {
    if (x.prime() != prime_) throw PrimeMismatch("argument over the wrong prime");
    check_domain(x);
    R sum = zero();
    R power = one();
    for (int n = 0; n <= degree(); ++n) {
      if (!coeff(n).is_exact_zero()) sum = sum + coeff(n) * power;
      if (n < degree()) power = power * x;
    }
    if (is_exact()) return {sum, std::nullopt, true};
    if (x.is_exact_zero()) return {sum, std::nullopt, true};
    const auto* b = std::get_if<BoundedTail>(&tail_);
    if (!b) return {sum, std::nullopt, false};
    const auto t = tail_minimum(*b, x.order(), degree() + 1, prime_);
    if (!t) return {sum, std::nullopt, false};
    const BigInt cap = ceil_of(*t);
    if (cap < sum.absolute_precision()) sum = sum.with_absolute_cap(cap.convert_to<int>());
    return {sum, t, true};
  }

  void check_domain(const R& x) const {
    if (!radius_.contains_order(x.order())) {
      throw DomainViolation("|x|_p <= r", "argument of order " + std::to_string(x.order()) +
                                              " lies outside " + radius_.describe(prime_));
    }
  }

  /// Converts the scalars (e.g. Q_p -> Q_p(i)).
  template <SeriesScalar S>
  PowerSeries<S> lift() const {
    std::vector<S> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(S{c});
    return PowerSeries<S>(prime_, precision_, std::move(cs), tail_, radius_);
  }

  R zero() const { return R{PadicNumber::zero(prime_)}; }
  R one() const { return R{PadicNumber::from_integer(1, prime_, precision_)}; }
  R integer(long long n) const { return R{PadicNumber::from_integer(n, prime_, precision_)}; }

 private:
  void check_compatible(const PowerSeries& g) const {
    if (g.prime_ != prime_) throw PrimeMismatch("series over different primes");
  }

  static int combined_degree_add(const PowerSeries& f, const PowerSeries& g) {
    if (f.is_exact() && g.is_exact()) return std::max(f.degree(), g.degree());
    if (f.is_exact()) return g.degree();
    if (g.is_exact()) return f.degree();
    return std::min(f.degree(), g.degree());
  }

  static Tail combine_tails(const PowerSeries& f, const PowerSeries& g, bool product) {
    if (f.is_exact() && g.is_exact()) return ExactTail{};
    if (std::holds_alternative<UnknownTail>(f.tail_) || std::holds_alternative<UnknownTail>(g.tail_)) {
      return UnknownTail{};
    }
    const Rational s_f = f.is_exact() ? std::get<BoundedTail>(g.tail_).slope : std::get<BoundedTail>(f.tail_).slope;
    const Rational s_g = g.is_exact() ? std::get<BoundedTail>(f.tail_).slope : std::get<BoundedTail>(g.tail_).slope;
    const BoundedTail a = f.as_bounded(s_f);
    const BoundedTail b = g.as_bounded(s_g);
    return product ? tail_mul(a, b) : tail_add(a, b);
  }

  std::uint32_t prime_;
  int precision_;
  std::vector<R> coeffs_;
  Tail tail_;
  Radius radius_;
};

using Series = PowerSeries<PadicNumber>;

}  // namespace padicmech::analysis
