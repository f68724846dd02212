#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "padicmech/analysis/power_series.hpp"

namespace padicmech::analysis {

/// Sparse polynomial in n variables, sum c_e x^e over exponent vectors e.
/// Exact zero coefficients are never stored. An optional total-degree cap
/// truncates products (used for bivariate series such as plane waves).
template <SeriesScalar R>
class MultiPoly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, R>;

  MultiPoly(std::uint32_t prime, int variables, int precision, std::optional<int> max_degree = std::nullopt)
      : prime_(prime), variables_(variables), precision_(precision), max_degree_(max_degree) {
    require_prime(prime_);
    if (variables_ < 1) throw InvalidArgument("a polynomial needs at least one variable");
  }

  static MultiPoly constant(const R& c, int variables, int precision) {
    MultiPoly out(c.prime(), variables, precision);
    out.add_term(Exponent(static_cast<std::size_t>(variables), 0), c);
    return out;
  }
  /// x_i.
  static MultiPoly variable(std::uint32_t prime, int variables, int index, int precision) {
    MultiPoly out(prime, variables, precision);
    Exponent e(static_cast<std::size_t>(variables), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    out.add_term(e, R{PadicNumber::from_integer(1, prime, precision)});
    return out;
  }
  /// A univariate polynomial series as a polynomial in one variable.
  static MultiPoly from_series(const PowerSeries<R>& f) {
    if (!f.is_exact()) throw InvalidArgument("only polynomial series convert to a MultiPoly");
    MultiPoly out(f.prime(), 1, f.precision());
    for (int n = 0; n <= f.degree(); ++n) out.add_term({n}, f.coeff(n));
    return out;
  }

  std::uint32_t prime() const noexcept { return prime_; }
  int variables() const noexcept { return variables_; }
  int precision() const noexcept { return precision_; }
  std::optional<int> max_degree() const noexcept { return max_degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Every coefficient is zero to its carried precision.
  bool vanishes() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_zero(); });
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
  }

  R coeff(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? zero() : it->second;
  }

  void add_term(const Exponent& e, const R& c) {
    if (static_cast<int>(e.size()) != variables_) throw DimensionMismatch("exponent length differs from variable count");
    if (c.prime() != prime_) throw PrimeMismatch("coefficient over the wrong prime");
    if (max_degree_ && degree_of(e) > *max_degree_) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_exact_zero()) terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_exact_zero()) terms_.erase(it);
  }

  MultiPoly truncated(int max_degree) const {
    MultiPoly out(prime_, variables_, precision_, max_degree);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out = empty_like();
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out = a.empty_like(b);
    for (const auto& [e, c] : a.terms_) out.add_term(e, c);
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out = a.empty_like(b);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  MultiPoly scaled_by(const R& s) const {
    MultiPoly out = empty_like();
    for (const auto& [e, c] : terms_) out.add_term(e, s * c);
    return out;
  }

  /// d/dx_i.
  MultiPoly partial(int index) const {
    if (index < 0 || index >= variables_) throw DimensionMismatch("no variable " + std::to_string(index));
    MultiPoly out = empty_like();
    for (const auto& [e, c] : terms_) {
      const int k = e[static_cast<std::size_t>(index)];
      if (k == 0) continue;
      Exponent d = e;
      --d[static_cast<std::size_t>(index)];
      out.add_term(d, c * integer(k));
    }
    return out;
  }

  R evaluate(const std::vector<R>& point) const {
    if (static_cast<int>(point.size()) != variables_) throw DimensionMismatch("point has the wrong dimension");
    R sum = zero();
    for (const auto& [e, c] : terms_) {
      R term = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (int k = 0; k < e[i]; ++k) term = term * point[i];
      }
      sum = sum + term;
    }
    return sum;
  }

  /// P(s_1(t), ..., s_n(t)) as a univariate series; tails and truncations
  /// propagate through the series arithmetic.
  PowerSeries<R> compose(const std::vector<PowerSeries<R>>& inner) const {
    if (static_cast<int>(inner.size()) != variables_) throw DimensionMismatch("need one series per variable");
    PowerSeries<R> sum = PowerSeries<R>::constant(zero(), precision_);
    std::vector<std::vector<PowerSeries<R>>> powers(inner.size());
    for (const auto& [e, c] : terms_) {
      PowerSeries<R> term = PowerSeries<R>::constant(c, precision_);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        term = term * power_of(inner[i], e[i], powers[i]);
      }
      sum = sum + term;
    }
    return sum;
  }

  /// P(Q_1, ..., Q_n) for polynomials Q_i in a common set of variables.
  MultiPoly substitute(const std::vector<MultiPoly>& inner) const {
    if (static_cast<int>(inner.size()) != variables_) throw DimensionMismatch("need one polynomial per variable");
    const int m = inner.front().variables();
    std::optional<int> cap = max_degree_;
    for (const auto& q : inner) {
      if (q.variables() != m) throw DimensionMismatch("substituted polynomials disagree on variable count");
      if (q.max_degree_) cap = cap ? std::min(*cap, *q.max_degree_) : q.max_degree_;
    }
    MultiPoly sum(prime_, m, precision_, cap);
    std::vector<std::vector<MultiPoly>> powers(inner.size());
    for (const auto& [e, c] : terms_) {
      MultiPoly term = MultiPoly::constant(c, m, precision_).truncated_opt(cap);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        term = term * power_of(inner[i], e[i], powers[i]);
      }
      sum = sum + term;
    }
    return sum;
  }

  R zero() const { return R{PadicNumber::zero(prime_)}; }
  R integer(long long n) const { return R{PadicNumber::from_integer(n, prime_, precision_)}; }

 private:
  static int degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

  MultiPoly truncated_opt(std::optional<int> cap) const { return cap ? truncated(*cap) : *this; }

  MultiPoly empty_like() const { return MultiPoly(prime_, variables_, precision_, max_degree_); }
  MultiPoly empty_like(const MultiPoly& other) const {
    std::optional<int> cap = max_degree_;
    if (other.max_degree_) cap = cap ? std::min(*cap, *other.max_degree_) : other.max_degree_;
    return MultiPoly(prime_, variables_, std::min(precision_, other.precision_), cap);
  }

  void check_compatible(const MultiPoly& other) const {
    if (other.prime_ != prime_) throw PrimeMismatch("polynomials over different primes");
    if (other.variables_ != variables_) throw DimensionMismatch("polynomials in different variable counts");
  }

  template <class T>
  static const T& power_of(const T& base, int k, std::vector<T>& cache) {
    if (cache.empty()) cache.push_back(base);
    while (static_cast<int>(cache.size()) < k) cache.push_back(cache.back() * base);
    return cache[static_cast<std::size_t>(k - 1)];
  }

  std::uint32_t prime_;
  int variables_;
  int precision_;
  std::optional<int> max_degree_;
  Terms terms_;
};

using Poly = MultiPoly<PadicNumber>;

}  // namespace padicmech::analysis
