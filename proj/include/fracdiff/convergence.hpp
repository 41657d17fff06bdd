#pragma once

#include "fracdiff/caputo.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fracdiff {

/// Refinement benchmarks, keyed by the table they regenerate.
enum class BenchmarkId {
    Table1,    ///< L1 derivative of cos x at x = 1, α = 0.6
    Table2Cos, ///< corrected J^{2−α} of cos x at x = 1, α = 0.4
    Table2Log, ///< corrected J^{2−α} of ln(1+x) at x = 1, α = 0.4
    Table3Cos, ///< L1Z derivative of cos x at x = 1, α = 0.25
    Table3Log, ///< L1Z derivative of ln(1+x) at x = 1, α = 0.25
    Table4,    ///< relaxation equation, α = 0.8, max error over [0, 1]
    Table5,    ///< subdiffusion, α = 0.6, τ = h, implicit first layer
    Table6,    ///< subdiffusion, α = 0.4, τ = h/2, implicit first layer
    Table7,    ///< subdiffusion, α = 0.6, τ = h, Taylor first layer
};

/// How the time step follows the space step in a refinement.
enum class Coupling {
    FixedX,     ///< single-point derivative/integral study, no time grid
    TauEqualsH, ///< τ = h (for the relaxation equation, the step itself)
    TauHalfH,   ///< τ = h/2
};

std::string_view to_string(BenchmarkId id);
BenchmarkId parse_benchmark(std::string_view text);
std::string_view to_string(Coupling coupling);
Coupling parse_coupling(std::string_view text);

/// The configuration a table was produced with.
struct BenchmarkDefaults {
    BenchmarkId id;
    double alpha;
    Coupling coupling;
    std::vector<SchemeKind> schemes; ///< empty for the integral benchmarks
    std::vector<double> h_list;
};

BenchmarkDefaults benchmark_defaults(BenchmarkId id);
const std::vector<BenchmarkId>& all_benchmarks();

struct ConvergenceRow {
    double h = 0.0;
    std::optional<double> tau;
    double max_error = 0.0;
    std::optional<double> ratio; ///< error of the previous row / this error
    std::optional<double> order; ///< log2(ratio)
};

struct ReportMeta {
    BenchmarkId benchmark = BenchmarkId::Table1;
    std::optional<SchemeKind> scheme;
    double alpha = 0.0;
    Coupling coupling = Coupling::FixedX;
    std::string error_measure;
};

/// Rows ordered by decreasing h; the first row has no ratio or order.
struct ConvergenceReport {
    ReportMeta meta;
    std::vector<ConvergenceRow> rows;
};

/// max |approx_i − exact_i|; DomainError on length mismatch.
double max_error(std::span<const double> approx, std::span<const double> exact);

/// log2(e_coarse / e_fine) for a halving refinement; both errors must be positive.
double estimate_order(double e_coarse, double e_fine);

/// Fills ratio and order of every row after the first from adjacent errors.
void annotate_orders(std::vector<ConvergenceRow>& rows);

struct StudyOptions {
    /// Rows computed concurrently; 0 or 1 runs sequentially.
    unsigned threads = 0;
};

/// Runs one column of a table: for each h, solve or approximate and measure
/// the error against the series oracle or closed-form solution.
///
/// Error measures: endpoint x = 1 for the derivative studies; Γ(2−α)·|error|
/// at x = 1 for the integral studies (the scaled form the sums approximate);
/// max over all time nodes for the relaxation study; max over x at t = T for
/// the subdiffusion studies.
ConvergenceReport run_study(BenchmarkId id, std::optional<SchemeKind> scheme, double alpha,
                            std::span<const double> h_list, Coupling coupling, const StudyOptions& options = {});

/// Reads FRACDIFF_THREADS (unset or 0: sequential).
StudyOptions study_options_from_environment();

void write_report_csv(std::ostream& out, const ConvergenceReport& report);
void write_report_pretty(std::ostream& out, const ConvergenceReport& report);

} // namespace fracdiff
