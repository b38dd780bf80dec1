// Locale-free numeric text formatting shared by the CSV/JSON emitters.
#pragma once

#include <string>

namespace abscat {

/// Format with 17 significant digits (round-trip exact for double),
/// independent of the global locale.
std::string format_sig17(double value);

/// Strict double parse of a whole token; throws std::invalid_argument on
/// trailing garbage or empty input.
double parse_double(const std::string& token);

}  // namespace abscat
