#include "padicmech/text.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "padicmech/errors.hpp"

namespace padicmech {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view s, const char* what) {
  s = trim(s);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(std::string("bad ") + what + ": '" + std::string(s) + "'");
  }
  return value;
}

std::string digit_list(const PadicInt& x) {
  std::string out;
  for (int i = 0; i < x.precision(); ++i) {
    if (i) out += ' ';
    out += std::to_string(x.digit(i));
  }
  return out;
}

// "p:K:digits" -> PadicInt, with K = 0 allowed only when `allow_empty`.
struct Fields {
  std::uint32_t prime;
  int precision;
  std::vector<PadicInt::Digit> digits;
};

Fields split_fields(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw ParseError("expected p:K:digits, got '" + std::string(text) + "'");
  const long long p = parse_int(text.substr(0, c1), "prime");
  const long long k = parse_int(text.substr(c1 + 1, c2 - c1 - 1), "precision");
  if (p < 2 || k < 0) throw ParseError("prime or precision out of range");
  Fields f{static_cast<std::uint32_t>(p), static_cast<int>(k), {}};
  std::istringstream in{std::string(text.substr(c2 + 1))};
  std::string token;
  while (in >> token) {
    const long long d = parse_int(token, "digit");
    if (d < 0 || d >= p) throw ParseError("digit " + token + " out of range for p=" + std::to_string(p));
    f.digits.push_back(static_cast<PadicInt::Digit>(d));
  }
  if (static_cast<long long>(f.digits.size()) != k) {
    throw ParseError("expected " + std::to_string(k) + " digits, got " + std::to_string(f.digits.size()));
  }
  try {
    require_prime(f.prime);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return f;
}

}  // namespace

std::string format(const PadicInt& x) {
  return std::to_string(x.prime()) + ":" + std::to_string(x.precision()) + ":" + digit_list(x);
}

std::string format(const PadicNumber& x) {
  const std::string p = std::to_string(x.prime());
  if (x.is_exact_zero()) return "v=inf:" + p + ":0:";
  if (x.is_zero()) return "v=" + std::to_string(x.order()) + ":" + p + ":0:";
  return "v=" + std::to_string(x.valuation()) + ":" + format(x.unit());
}

PadicInt parse_padic_int(std::string_view text) {
  const Fields f = split_fields(trim(text));
  if (f.precision < 1) throw ParseError("a Z_p value needs at least one digit");
  return PadicInt::from_digits(f.prime, f.digits);
}

PadicNumber parse_padic_number(std::string_view text) {
  text = trim(text);
  if (text.substr(0, 2) != "v=") {
    return PadicNumber::from_padic_int(parse_padic_int(text));
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("missing ':' after valuation");
  const std::string_view v = text.substr(2, colon - 2);
  const Fields f = split_fields(text.substr(colon + 1));
  if (v == "inf") {
    if (f.precision != 0) throw ParseError("exact zero carries no digits");
    return PadicNumber::zero(f.prime);
  }
  const int valuation = static_cast<int>(parse_int(v, "valuation"));
  if (f.precision == 0) return PadicNumber::zero_mod(f.prime, valuation);
  if (f.digits.front() == 0) throw ParseError("unit part must have a nonzero leading digit");
  return PadicNumber::from_unit(valuation, PadicInt::from_digits(f.prime, f.digits));
}

PadicNumber parse_value(std::string_view text, std::uint32_t prime, int precision) {
  text = trim(text);
  if (text.find(':') != std::string_view::npos) {
    PadicNumber x = parse_padic_number(text);
    if (x.prime() != prime) {
      throw PrimeMismatch("value '" + std::string(text) + "' is not in Q_" + std::to_string(prime));
    }
    return x;
  }
  return PadicNumber::from_rational(parse_rational(text), prime, precision);
}

}  // namespace padicmech
