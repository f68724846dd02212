#include "padicmech/quantum/complex.hpp"

#include <algorithm>

#include "padicmech/errors.hpp"
#include "padicmech/text.hpp"

namespace padicmech::quantum {

void require_extension(std::uint32_t prime) {
  if (prime % 4 != 3) {
    throw ExtensionUndefined("Q_" + std::to_string(prime) + "(i) is not a field: needs p = 3 (mod 4)");
  }
}

PadicComplex::PadicComplex(const PadicNumber& re) : PadicComplex(re, PadicNumber::zero(re.prime())) {}

PadicComplex::PadicComplex(PadicNumber re, PadicNumber im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.prime() != im_.prime()) throw PrimeMismatch("real and imaginary parts over different primes");
  require_extension(re_.prime());
}

PadicComplex PadicComplex::i(std::uint32_t prime, int precision) {
  return {PadicNumber::zero(prime), PadicNumber::from_integer(1, prime, precision)};
}

int PadicComplex::order() const noexcept { return std::min(re_.order(), im_.order()); }

int PadicComplex::absolute_precision() const noexcept {
  return std::min(re_.absolute_precision(), im_.absolute_precision());
}

PadicComplex PadicComplex::with_absolute_cap(int n) const {
  return {re_.with_absolute_cap(n), im_.with_absolute_cap(n)};
}

Norm PadicComplex::norm() const { return std::max(re_.norm(), im_.norm()); }

PadicComplex operator+(const PadicComplex& a, const PadicComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }

PadicComplex operator-(const PadicComplex& a, const PadicComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }

PadicComplex operator*(const PadicComplex& a, const PadicComplex& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

PadicComplex operator/(const PadicComplex& a, const PadicComplex& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero in Q_p(i)");
  const PadicNumber d = b.modulus_sq();
  const PadicComplex n = a * b.conj();
  return {n.re_ / d, n.im_ / d};
}

bool congruent(const PadicComplex& a, const PadicComplex& b) { return (a - b).is_zero(); }

std::string format(const PadicComplex& z) {
  return "(" + padicmech::format(z.re()) + "|" + padicmech::format(z.im()) + ")";
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return padicmech::to_string(z.re);
  const std::string im = padicmech::to_string(z.im) + "i";
  if (z.re == 0) return im;
  return padicmech::to_string(z.re) + (z.im > 0 ? "+" : "") + im;
}

GaussianRational parse_gaussian(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  if (s.empty()) throw ParseError("empty Gaussian rational");
  if (s.back() != 'i') return {parse_rational(s), 0};
  s.pop_back();
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  auto coefficient = [](const std::string& t) -> Rational {
    if (t.empty() || t == "+") return 1;
    if (t == "-") return -1;
    return parse_rational(t[0] == '+' ? t.substr(1) : t);
  };
  if (split == std::string::npos) return {0, coefficient(s)};
  return {parse_rational(s.substr(0, split)), coefficient(s.substr(split))};
}

PadicComplex to_padic(const GaussianRational& z, std::uint32_t prime, int precision) {
  return {PadicNumber::from_rational(z.re, prime, precision), PadicNumber::from_rational(z.im, prime, precision)};
}

}  // namespace padicmech::quantum
