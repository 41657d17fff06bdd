#include "fracdiff/fractional_integral.hpp"

#include "fracdiff/caputo.hpp"
#include "fracdiff/errors.hpp"
#include "fracdiff/special_functions.hpp"

#include <cmath>

namespace fracdiff {

namespace {

// Σ_{k=first}^{last} k^{1−α} y_{n−k}
double power_weighted_sum(const SampledFunction& y, double alpha, int first, int last) {
    const int n = y.intervals();
    double acc = 0.0;
    for (int k = first; k <= last; ++k) acc += std::pow(static_cast<double>(k), 1.0 - alpha) * y[n - k];
    return acc;
}

} // namespace

WeightedSumResult left_riemann_sum(const SampledFunction& y, double alpha) {
    detail::require_fractional_order(alpha);
    const int n = y.intervals();
    const double h = y.h();
    return {std::pow(h, 2.0 - alpha) * power_weighted_sum(y, alpha, 1, n), h, n};
}

WeightedSumResult trapezoid_sum(const SampledFunction& y, double alpha) {
    detail::require_fractional_order(alpha);
    const int n = y.intervals();
    const double h = y.h();
    const double boundary = y[0] / 2.0 * std::pow(y.length(), 1.0 - alpha) * h;
    return {boundary + std::pow(h, 2.0 - alpha) * power_weighted_sum(y, alpha, 1, n - 1), h, n};
}

double frac_integral_2ma(const SampledFunction& y, double alpha) {
    detail::require_fractional_order(alpha);
    detail::require(y.intervals() >= 2, "corrected integral needs at least two intervals");
    const double h = y.h();
    const double x = y.length();
    const double left = left_riemann_sum(y, alpha).value;
    const double corrected = left - y[0] * std::pow(x, 1.0 - alpha) * h / 2.0 -
                             zeta(alpha - 1.0) * y[y.intervals()] * std::pow(h, 2.0 - alpha);
    return corrected / gamma(2.0 - alpha);
}

double frac_integral_oracle(const TestFunction& y, double alpha, double x) {
    detail::require_fractional_order(alpha);
    return fractional_power_series(y, 2.0 - alpha, x, 0);
}

double caputo_integral_residual(const TestFunction& y, double alpha, double x) {
    detail::require_fractional_order(alpha);
    const double g = gamma(2.0 - alpha);
    const double caputo = caputo_series_oracle(y, alpha, x);
    const double integral = frac_integral_oracle(y.derivative(2), alpha, x);
    const double slope_at_zero = y.taylor_coefficient(1);
    return std::abs(g * caputo - g * integral - slope_at_zero * std::pow(x, 1.0 - alpha));
}

} // namespace fracdiff
