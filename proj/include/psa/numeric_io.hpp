#pragma once

#include <span>
#include <string>
#include <string_view>

namespace psa {

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

/// Strict full-token parse; throws std::invalid_argument on anything else.
double parse_double(std::string_view s);

/// "(x1, x2, ...)" with round-trip formatting, for diagnostics.
std::string format_point(std::span<const double> x);

}  // namespace psa
