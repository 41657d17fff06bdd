#include "fracdiff/caputo.hpp"

#include "fracdiff/errors.hpp"
#include "fracdiff/special_functions.hpp"

#include <cmath>
#include <string>

namespace fracdiff {

SampledFunction::SampledFunction(double h, std::vector<double> values, double origin)
    : h_(h), origin_(origin), values_(std::move(values)) {
    detail::require(h > 0.0 && std::isfinite(h), "grid step must be positive and finite");
    detail::require(values_.size() >= 2, "a sampled function needs at least one interval");
}

SampledFunction SampledFunction::sample(const std::function<double(double)>& fn, double h, int intervals,
                                        double origin) {
    detail::require(intervals >= 1, "a sampled function needs at least one interval");
    std::vector<double> values(static_cast<std::size_t>(intervals) + 1);
    for (int n = 0; n <= intervals; ++n) {
        values[static_cast<std::size_t>(n)] = fn(origin + static_cast<double>(n) * h);
    }
    return SampledFunction(h, std::move(values), origin);
}

std::string_view to_string(SchemeKind kind) {
    return kind == SchemeKind::L1 ? "l1" : "l1z";
}

SchemeKind parse_scheme(std::string_view text) {
    if (text == "l1" || text == "L1") return SchemeKind::L1;
    if (text == "l1z" || text == "L1Z") return SchemeKind::L1Z;
    throw DomainError("unknown scheme '" + std::string(text) + "' (expected l1 or l1z)");
}

namespace {

double one_minus_alpha_power(int k, double alpha) {
    return k == 0 ? 0.0 : std::pow(static_cast<double>(k), 1.0 - alpha);
}

} // namespace

HistoryWeights::HistoryWeights(SchemeKind kind, double alpha, int max_n)
    : kind_(kind), alpha_(alpha), max_n_(max_n) {
    detail::require_fractional_order(alpha);
    detail::require(max_n >= 1, "scheme needs n >= 1");
    if (kind == SchemeKind::L1Z) {
        detail::require(max_n >= 2, "the zeta-corrected scheme needs n >= 2");
        zeta_shift_ = zeta(alpha - 1.0);
    }

    std::vector<double> power(static_cast<std::size_t>(max_n) + 2);
    for (int k = 0; k <= max_n + 1; ++k) power[static_cast<std::size_t>(k)] = one_minus_alpha_power(k, alpha);

    interior_.assign(static_cast<std::size_t>(max_n) + 1, 0.0);
    boundary_.assign(static_cast<std::size_t>(max_n) + 1, 0.0);
    interior_[0] = 1.0;
    for (int k = 1; k <= max_n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        interior_[i] = power[i + 1] - 2.0 * power[i] + power[i - 1];
        boundary_[i] = power[i - 1] - power[i];
    }
}

double HistoryWeights::weight(int n, int k) const {
    double w = 0.0;
    if (k == 0) {
        w = 1.0;
    } else if (k == n) {
        w = boundary_[static_cast<std::size_t>(n)];
    } else {
        w = interior_[static_cast<std::size_t>(k)];
    }
    if (kind_ == SchemeKind::L1Z) {
        if (k == 0 || k == 2) w -= zeta_shift_;
        else if (k == 1) w += 2.0 * zeta_shift_;
    }
    return w;
}

double HistoryWeights::history_sum(int n, std::span<const double> history) const {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += weight(n, k) * history[static_cast<std::size_t>(n - k)];
    return acc;
}

SchemeCoefficients scheme_coefficients(SchemeKind kind, double alpha, int n) {
    detail::require_fractional_order(alpha);
    detail::require(n >= 1, "scheme needs n >= 1");
    if (kind == SchemeKind::L1Z) detail::require(n >= 2, "the zeta-corrected scheme needs n >= 2");
    const HistoryWeights table(kind, alpha, n);
    SchemeCoefficients out{alpha, n, kind, std::vector<double>(static_cast<std::size_t>(n) + 1)};
    for (int k = 0; k <= n; ++k) out.weights[static_cast<std::size_t>(k)] = table.weight(n, k);
    return out;
}

SchemeCoefficients sigma_coefficients(double alpha, int n) {
    return scheme_coefficients(SchemeKind::L1, alpha, n);
}

SchemeCoefficients delta_coefficients(double alpha, int n) {
    return scheme_coefficients(SchemeKind::L1Z, alpha, n);
}

double caputo_approx(SchemeKind kind, const SampledFunction& y, double alpha) {
    const int n = y.intervals();
    const SchemeCoefficients c = scheme_coefficients(kind, alpha, n);
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) acc += c.weights[static_cast<std::size_t>(k)] * y[n - k];
    return acc / (gamma(2.0 - alpha) * std::pow(y.h(), alpha));
}

double caputo_l1(const SampledFunction& y, double alpha) {
    return caputo_approx(SchemeKind::L1, y, alpha);
}

double caputo_l1z(const SampledFunction& y, double alpha) {
    return caputo_approx(SchemeKind::L1Z, y, alpha);
}

double caputo_first_step(double y0, double y1, double alpha, double h) {
    detail::require_fractional_order(alpha);
    detail::require(h > 0.0, "step must be positive");
    return (y1 - y0) / (gamma(2.0 - alpha) * std::pow(h, alpha));
}

double caputo_series_oracle(const TestFunction& y, double alpha, double x) {
    detail::require_fractional_order(alpha);
    return fractional_power_series(y, -alpha, x, 1);
}

} // namespace fracdiff
