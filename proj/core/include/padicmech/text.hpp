#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "padicmech/padic_int.hpp"
#include "padicmech/padic_number.hpp"

namespace padicmech {

// Canonical text forms, digits little-endian and space separated:
//   Z_p element         p:K:a0 a1 ... a(K-1)
//   nonzero Q_p element v=<v>:p:K:u0 u1 ... u(K-1)   (u = unit part)
//   zero mod p^N        v=<N>:p:0:
//   exact zero          v=inf:p:0:

std::string format(const PadicInt& x);
std::string format(const PadicNumber& x);

PadicInt parse_padic_int(std::string_view text);
PadicNumber parse_padic_number(std::string_view text);

/// Accepts either canonical form or a rational literal ("3", "-1/4"), the
/// latter rendered at `prime` with `precision` relative digits.
PadicNumber parse_value(std::string_view text, std::uint32_t prime, int precision);

}  // namespace padicmech
