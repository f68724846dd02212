#pragma once

#include <string>
#include <string_view>

#include "padicmech/analysis/power_series.hpp"

namespace padicmech::analysis {

/// p:D:[c_0,c_1,...,c_D], each c_n in the Q_p text form. The tail and radius
/// are not part of the text.
std::string format(const Series& f);

/// Parses the form above as a polynomial. Coefficients may also be rational
/// literals, rendered at `precision` digits.
Series parse_series(std::string_view text, int precision = kDefaultPrecision);

}  // namespace padicmech::analysis
