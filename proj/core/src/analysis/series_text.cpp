#include "padicmech/analysis/series_text.hpp"

#include "padicmech/text.hpp"

namespace padicmech::analysis {

std::string format(const Series& f) {
  std::string out = std::to_string(f.prime()) + ":" + std::to_string(f.degree()) + ":[";
  for (int n = 0; n <= f.degree(); ++n) {
    if (n) out += ',';
    out += padicmech::format(f.coeff(n));
  }
  return out + "]";
}

Series parse_series(std::string_view text, int precision) {
  const auto open = text.find('[');
  const auto close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw ParseError("expected p:D:[c_0,...]");
  }
  const std::string_view head = text.substr(0, open);
  const auto c1 = head.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : head.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw ParseError("expected p:D: before the coefficient list");
  const BigInt p = parse_integer(head.substr(0, c1));
  const BigInt D = parse_integer(head.substr(c1 + 1, c2 - c1 - 1));
  if (p < 2 || p > BigInt(std::numeric_limits<std::uint32_t>::max()) || D < 0) {
    throw ParseError("prime or degree out of range");
  }
  const auto prime = p.convert_to<std::uint32_t>();
  std::vector<PadicNumber> cs;
  std::string_view body = text.substr(open + 1, close - open - 1);
  while (!body.empty()) {
    const auto comma = body.find(',');
    cs.push_back(parse_value(body.substr(0, comma), prime, precision));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (BigInt(cs.size()) != D + 1) {
    throw ParseError("series of degree " + to_string(D) + " needs " + to_string(D + 1) + " coefficients");
  }
  return Series::polynomial(prime, precision, std::move(cs));
}

}  // namespace padicmech::analysis
