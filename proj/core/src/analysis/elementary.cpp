#include "padicmech/analysis/elementary.hpp"

namespace padicmech::analysis {

Elementary parse_elementary(const std::string& name) {
  if (name == "exp") return Elementary::Exp;
  if (name == "sin") return Elementary::Sin;
  if (name == "cos") return Elementary::Cos;
  throw InvalidArgument("unknown elementary function '" + name + "' (expected exp, sin or cos)");
}

const char* to_string(Elementary kind) {
  switch (kind) {
    case Elementary::Exp:
      return "exp";
    case Elementary::Sin:
      return "sin";
    case Elementary::Cos:
      return "cos";
  }
  return "?";
}

int convergence_valuation(std::uint32_t prime) { return prime == 2 ? 2 : 1; }

Series elementary(Elementary kind, std::uint32_t prime, int degree, int precision) {
  require_prime(prime);
  if (degree < 1) throw InvalidArgument("series degree must be >= 1");
  if (precision < 1) throw InvalidArgument("precision must be >= 1");
  std::vector<PadicNumber> cs;
  cs.reserve(static_cast<std::size_t>(degree + 1));
  BigInt fact = 1;
  for (int n = 0; n <= degree; ++n) {
    if (n > 0) fact *= n;
    int sign = 0;
    switch (kind) {
      case Elementary::Exp:
        sign = 1;
        break;
      case Elementary::Sin:
        sign = n % 2 == 1 ? ((n / 2) % 2 == 0 ? 1 : -1) : 0;
        break;
      case Elementary::Cos:
        sign = n % 2 == 0 ? ((n / 2) % 2 == 0 ? 1 : -1) : 0;
        break;
    }
    cs.push_back(sign == 0 ? PadicNumber::zero(prime)
                           : PadicNumber::from_rational(Rational(BigInt(sign), fact), prime, precision));
  }
  const BoundedTail tail{Rational(1, prime - 1), Rational(0), Rational(0)};
  return Series(prime, precision, std::move(cs), tail, Radius::at_least(convergence_valuation(prime)));
}

}  // namespace padicmech::analysis
