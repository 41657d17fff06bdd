#include "fracdiff/csv.hpp"

#include <cstdio>

namespace fracdiff {

std::string format_double(double value) {
    // the CLI never calls setlocale, so printf stays in the "C" locale
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string format_optional(std::optional<double> value) {
    return value ? format_double(*value) : std::string{};
}

} // namespace fracdiff
