#pragma once

#include <optional>
#include <string>

namespace fracdiff {

/// 17 significant digits with a "." separator, so values read back exactly.
std::string format_double(double value);

/// Empty string for an absent value.
std::string format_optional(std::optional<double> value);

} // namespace fracdiff
