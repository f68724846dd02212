#pragma once

#include <cstdint>
#include <string>

#include "padicmech/analysis/power_series.hpp"

namespace padicmech::analysis {

enum class Elementary { Exp, Sin, Cos };

Elementary parse_elementary(const std::string& name);
const char* to_string(Elementary kind);

/// Valuation bound of the convergence radius r_p: 1 for odd p (r_p = 1/p),
/// 2 for p = 2 (r_2 = 1/4).
int convergence_valuation(std::uint32_t prime);

/// exp, sin or cos to degree D with coefficients 1/n! (with signs) rendered
/// at `precision` relative digits. Since v_p(n!) <= n/(p-1) the tail bound
/// has slope 1/(p-1), which the radius r_p strictly dominates.
Series elementary(Elementary kind, std::uint32_t prime, int degree, int precision = kDefaultPrecision);

}  // namespace padicmech::analysis
