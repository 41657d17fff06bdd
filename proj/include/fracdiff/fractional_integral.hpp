#pragma once

#include "fracdiff/grid.hpp"
#include "fracdiff/test_functions.hpp"

namespace fracdiff {

/// A weighted sum over the partition of [0, x], x = n·h.
struct WeightedSumResult {
    double value = 0.0;
    double h = 0.0;
    int n = 0;
};

/// Left Riemann sum of (x − ξ)^{1−α} y(ξ): h^{2−α} Σ_{k=1}^{n} k^{1−α} y(x − kh).
/// Approximates Γ(2−α) J^{2−α} y(x) to first order.
WeightedSumResult left_riemann_sum(const SampledFunction& y, double alpha);

/// Trapezoidal sum of the same integrand:
/// y(0) x^{1−α} h / 2 + h^{2−α} Σ_{k=1}^{n−1} k^{1−α} y(x − kh).
WeightedSumResult trapezoid_sum(const SampledFunction& y, double alpha);

/// Second-order approximation of J^{2−α} y at the last sample:
///
///     [L − y_0 x^{1−α} h/2 − ζ(α−1) y_n h^{2−α}] / Γ(2−α)
///
/// where L is the left Riemann sum. Requires at least two intervals.
double frac_integral_2ma(const SampledFunction& y, double alpha);

/// J^{2−α} y(x) of a reference function from its Taylor series.
double frac_integral_oracle(const TestFunction& y, double alpha, double x);

/// |Γ(2−α) y^{(α)}(x) − Γ(2−α) J^{2−α} y''(x) − y'(0) x^{1−α}|, each term
/// evaluated from series. Vanishes up to roundoff for C² functions.
double caputo_integral_residual(const TestFunction& y, double alpha, double x);

} // namespace fracdiff
