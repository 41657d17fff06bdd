#include "fracdiff/convergence.hpp"

#include "fracdiff/csv.hpp"
#include "fracdiff/errors.hpp"
#include "fracdiff/fractional_integral.hpp"
#include "fracdiff/relaxation.hpp"
#include "fracdiff/special_functions.hpp"
#include "fracdiff/subdiffusion.hpp"
#include "fracdiff/test_functions.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

namespace fracdiff {

namespace {

constexpr std::array<BenchmarkId, 9> kBenchmarks = {
    BenchmarkId::Table1, BenchmarkId::Table2Cos, BenchmarkId::Table2Log, BenchmarkId::Table3Cos,
    BenchmarkId::Table3Log, BenchmarkId::Table4, BenchmarkId::Table5, BenchmarkId::Table6, BenchmarkId::Table7,
};

const std::vector<double> kTableSteps = {0.05, 0.025, 0.0125, 0.00625, 0.003125};

enum class StudyFamily { Derivative, Integral, Relaxation, Subdiffusion };

StudyFamily family_of(BenchmarkId id) {
    switch (id) {
    case BenchmarkId::Table1:
    case BenchmarkId::Table3Cos:
    case BenchmarkId::Table3Log: return StudyFamily::Derivative;
    case BenchmarkId::Table2Cos:
    case BenchmarkId::Table2Log: return StudyFamily::Integral;
    case BenchmarkId::Table4: return StudyFamily::Relaxation;
    case BenchmarkId::Table5:
    case BenchmarkId::Table6:
    case BenchmarkId::Table7: return StudyFamily::Subdiffusion;
    }
    return StudyFamily::Derivative;
}

TestFunction function_of(BenchmarkId id) {
    switch (id) {
    case BenchmarkId::Table2Log:
    case BenchmarkId::Table3Log: return TestFunction::log1p();
    default: return TestFunction::cosine();
    }
}

// Number of intervals of [0, 1] for step h; h must divide 1.
int intervals_for(double h) {
    detail::require(h > 0.0 && h <= 1.0, "step sizes must lie in (0, 1]");
    const double n = std::round(1.0 / h);
    detail::require(std::abs(n * h - 1.0) < 1e-9, "step sizes must divide the unit interval");
    return static_cast<int>(n);
}

void validate_steps(std::span<const double> h_list) {
    detail::require(!h_list.empty(), "refinement study needs at least one step size");
    for (std::size_t i = 0; i < h_list.size(); ++i) {
        intervals_for(h_list[i]);
        if (i > 0) {
            detail::require(std::abs(h_list[i] * 2.0 - h_list[i - 1]) <= 1e-12 * h_list[i - 1],
                            "step sizes must form a halving sequence");
        }
    }
}

std::string error_measure_of(StudyFamily family) {
    switch (family) {
    case StudyFamily::Derivative: return "abs error at x=1";
    case StudyFamily::Integral: return "Gamma(2-alpha) * abs error at x=1";
    case StudyFamily::Relaxation: return "max abs error over t_n in [0,1]";
    case StudyFamily::Subdiffusion: return "max abs error over x_n at t=1";
    }
    return {};
}

ConvergenceRow compute_row(BenchmarkId id, std::optional<SchemeKind> scheme, double alpha, double h,
                           Coupling coupling) {
    const int n = intervals_for(h);
    ConvergenceRow row;
    row.h = h;
    switch (family_of(id)) {
    case StudyFamily::Derivative: {
        const TestFunction y = function_of(id);
        const auto samples = SampledFunction::sample([&y](double x) { return y(x); }, h, n);
        row.max_error = std::abs(caputo_approx(*scheme, samples, alpha) - caputo_series_oracle(y, alpha, 1.0));
        break;
    }
    case StudyFamily::Integral: {
        const TestFunction y = function_of(id);
        const auto samples = SampledFunction::sample([&y](double x) { return y(x); }, h, n);
        row.max_error = gamma(2.0 - alpha) *
                        std::abs(frac_integral_2ma(samples, alpha) - frac_integral_oracle(y, alpha, 1.0));
        break;
    }
    case StudyFamily::Relaxation: {
        const auto solution = solve_relaxation(relaxation_reference_problem(alpha, n), *scheme);
        std::vector<double> exact(solution.values.size());
        for (std::size_t i = 0; i < exact.size(); ++i) {
            exact[i] = relaxation_exact_reference(static_cast<double>(i) * solution.h);
        }
        row.max_error = max_error(solution.values, exact);
        break;
    }
    case StudyFamily::Subdiffusion: {
        const int m = coupling == Coupling::TauHalfH ? 2 * n : n;
        const auto problem = subdiffusion_reference_problem(alpha, n, m);
        const FirstLayer first = id == BenchmarkId::Table7 ? FirstLayer::taylor(subdiffusion_reference_ut0)
                                                           : FirstLayer::implicit();
        const auto field = solve_subdiffusion(problem, *scheme, first);
        const auto final_layer = field.layer(m);
        std::vector<double> exact(final_layer.size());
        for (std::size_t i = 0; i < exact.size(); ++i) {
            exact[i] = subdiffusion_exact_reference(static_cast<double>(i) * field.h(), problem.T);
        }
        row.tau = field.tau();
        row.max_error = max_error(final_layer, exact);
        break;
    }
    }
    return row;
}

} // namespace

std::string_view to_string(BenchmarkId id) {
    switch (id) {
    case BenchmarkId::Table1: return "table1";
    case BenchmarkId::Table2Cos: return "table2-cos";
    case BenchmarkId::Table2Log: return "table2-log";
    case BenchmarkId::Table3Cos: return "table3-cos";
    case BenchmarkId::Table3Log: return "table3-log";
    case BenchmarkId::Table4: return "table4";
    case BenchmarkId::Table5: return "table5";
    case BenchmarkId::Table6: return "table6";
    case BenchmarkId::Table7: return "table7";
    }
    return "unknown";
}

BenchmarkId parse_benchmark(std::string_view text) {
    for (const auto id : kBenchmarks) {
        if (to_string(id) == text) return id;
    }
    throw DomainError("unknown benchmark id '" + std::string(text) + "'");
}

std::string_view to_string(Coupling coupling) {
    switch (coupling) {
    case Coupling::FixedX: return "fixed-x";
    case Coupling::TauEqualsH: return "tau=h";
    case Coupling::TauHalfH: return "tau=h/2";
    }
    return "unknown";
}

Coupling parse_coupling(std::string_view text) {
    for (const auto c : {Coupling::FixedX, Coupling::TauEqualsH, Coupling::TauHalfH}) {
        if (to_string(c) == text) return c;
    }
    throw DomainError("unknown coupling '" + std::string(text) + "' (expected fixed-x, tau=h, tau=h/2)");
}

const std::vector<BenchmarkId>& all_benchmarks() {
    static const std::vector<BenchmarkId> ids(kBenchmarks.begin(), kBenchmarks.end());
    return ids;
}

BenchmarkDefaults benchmark_defaults(BenchmarkId id) {
    using enum SchemeKind;
    switch (id) {
    case BenchmarkId::Table1: return {id, 0.6, Coupling::FixedX, {L1}, kTableSteps};
    case BenchmarkId::Table2Cos:
    case BenchmarkId::Table2Log: return {id, 0.4, Coupling::FixedX, {}, kTableSteps};
    case BenchmarkId::Table3Cos:
    case BenchmarkId::Table3Log: return {id, 0.25, Coupling::FixedX, {L1Z}, kTableSteps};
    case BenchmarkId::Table4: return {id, 0.8, Coupling::TauEqualsH, {L1, L1Z}, kTableSteps};
    case BenchmarkId::Table5: return {id, 0.6, Coupling::TauEqualsH, {L1, L1Z}, kTableSteps};
    case BenchmarkId::Table6: return {id, 0.4, Coupling::TauHalfH, {L1, L1Z}, kTableSteps};
    case BenchmarkId::Table7: return {id, 0.6, Coupling::TauEqualsH, {L1, L1Z}, kTableSteps};
    }
    throw DomainError("unknown benchmark id");
}

double max_error(std::span<const double> approx, std::span<const double> exact) {
    detail::require(approx.size() == exact.size(), "max_error: sequences differ in length");
    double worst = 0.0;
    for (std::size_t i = 0; i < approx.size(); ++i) worst = std::max(worst, std::abs(approx[i] - exact[i]));
    return worst;
}

double estimate_order(double e_coarse, double e_fine) {
    detail::require(e_coarse > 0.0 && e_fine > 0.0, "estimate_order: errors must be positive");
    return std::log2(e_coarse / e_fine);
}

void annotate_orders(std::vector<ConvergenceRow>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].ratio.reset();
        rows[i].order.reset();
        if (i == 0) continue;
        const double coarse = rows[i - 1].max_error;
        const double fine = rows[i].max_error;
        if (coarse > 0.0 && fine > 0.0) {
            rows[i].ratio = coarse / fine;
            rows[i].order = estimate_order(coarse, fine);
        }
    }
}

ConvergenceReport run_study(BenchmarkId id, std::optional<SchemeKind> scheme, double alpha,
                            std::span<const double> h_list, Coupling coupling, const StudyOptions& options) {
    detail::require_fractional_order(alpha);
    validate_steps(h_list);
    const StudyFamily family = family_of(id);
    switch (family) {
    case StudyFamily::Derivative:
        detail::require(scheme.has_value(), "derivative studies need a scheme");
        detail::require(coupling == Coupling::FixedX, "derivative studies use the fixed-x coupling");
        break;
    case StudyFamily::Integral:
        detail::require(!scheme.has_value(), "integral studies take no scheme");
        detail::require(coupling == Coupling::FixedX, "integral studies use the fixed-x coupling");
        break;
    case StudyFamily::Relaxation:
        detail::require(scheme.has_value(), "relaxation studies need a scheme");
        detail::require(coupling == Coupling::TauEqualsH, "relaxation studies use the tau=h coupling");
        break;
    case StudyFamily::Subdiffusion:
        detail::require(scheme.has_value(), "subdiffusion studies need a scheme");
        detail::require(coupling != Coupling::FixedX, "subdiffusion studies need tau=h or tau=h/2");
        break;
    }

    ConvergenceReport report;
    report.meta = {id, scheme, alpha, coupling, error_measure_of(family)};
    report.rows.resize(h_list.size());

    const std::size_t workers = std::min<std::size_t>(std::max(1u, options.threads), h_list.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < h_list.size(); ++i) {
            report.rows[i] = compute_row(id, scheme, alpha, h_list[i], coupling);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < h_list.size(); i = next++) {
                    try {
                        report.rows[i] = compute_row(id, scheme, alpha, h_list[i], coupling);
                    } catch (...) {
                        const std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    annotate_orders(report.rows);
    return report;
}

StudyOptions study_options_from_environment() {
    StudyOptions options;
    if (const char* value = std::getenv("FRACDIFF_THREADS")) {
        char* end = nullptr;
        const unsigned long parsed = std::strtoul(value, &end, 10);
        if (end != value && *end == '\0') options.threads = static_cast<unsigned>(std::min(parsed, 256ul));
    }
    return options;
}

void write_report_csv(std::ostream& out, const ConvergenceReport& report) {
    out << "h,tau,error,ratio,order\n";
    for (const auto& row : report.rows) {
        out << format_double(row.h) << ',' << format_optional(row.tau) << ',' << format_double(row.max_error) << ','
            << format_optional(row.ratio) << ',' << format_optional(row.order) << '\n';
    }
}

void write_report_pretty(std::ostream& out, const ConvergenceReport& report) {
    const auto& m = report.meta;
    out << to_string(m.benchmark);
    if (m.scheme) out << "  scheme=" << to_string(*m.scheme);
    char line[160];
    std::snprintf(line, sizeof line, "  alpha=%g", m.alpha);
    out << line << "  coupling=" << to_string(m.coupling) << "\n";
    out << "error: " << m.error_measure << "\n";
    std::snprintf(line, sizeof line, "%-12s %-12s %-16s %-10s %-10s\n", "h", "tau", "error", "ratio", "order");
    out << line;
    for (const auto& row : report.rows) {
        auto opt = [](std::optional<double> v, const char* fmt) {
            char buf[32] = "";
            if (v) std::snprintf(buf, sizeof buf, fmt, *v);
            return std::string(buf);
        };
        std::snprintf(line, sizeof line, "%-12g %-12s %-16.9g %-10s %-10s\n", row.h, opt(row.tau, "%g").c_str(),
                      row.max_error, opt(row.ratio, "%.5f").c_str(), opt(row.order, "%.5f").c_str());
        out << line;
    }
}

} // namespace fracdiff
