#include "fracdiff/cli.hpp"

#include "fracdiff/caputo.hpp"
#include "fracdiff/convergence.hpp"
#include "fracdiff/csv.hpp"
#include "fracdiff/errors.hpp"
#include "fracdiff/fractional_integral.hpp"
#include "fracdiff/relaxation.hpp"
#include "fracdiff/special_functions.hpp"
#include "fracdiff/subdiffusion.hpp"
#include "fracdiff/test_functions.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace fracdiff {

namespace {

constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

struct Settings {
    double alpha = 0.5;
    double h = 0.05;
    double x = 1.0;
    double T = 1.0;
    double B = 1.0;
    double y0 = 1.0;
    int n = 20;
    int m = 20;
    std::string scheme = "l1z";
    std::string fn = "cos";
    std::string benchmark = "reference";
    std::string first_layer = "implicit";
    std::string layers = "final";
    std::string table_id = "all";
    std::string output = "pretty";
    std::string out_path;
    std::optional<std::string> table_scheme;
    std::optional<double> table_alpha;
};

bool csv_output(const Settings& s) { return s.output == "csv"; }

// Intervals of [0, length] for step h; h must divide the length.
int intervals_for(double length, double h) {
    detail::require(h > 0.0, "--step must be positive");
    const double n = std::round(length / h);
    detail::require(n >= 1.0 && std::abs(n * h - length) <= 1e-9 * length, "--step must divide --x evenly");
    return static_cast<int>(n);
}

std::string short_double(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%g", value);
    return buffer;
}

void print_kv(std::ostream& out, const char* key, double value) {
    char line[96];
    std::snprintf(line, sizeof line, "%-20s %.15g\n", key, value);
    out << line;
}

void run_coeffs(const Settings& s, std::ostream& out) {
    const auto c = scheme_coefficients(parse_scheme(s.scheme), s.alpha, s.n);
    if (csv_output(s)) {
        out << "k,weight\n";
        for (std::size_t k = 0; k < c.weights.size(); ++k) out << k << ',' << format_double(c.weights[k]) << '\n';
        return;
    }
    out << "scheme=" << to_string(c.kind) << "  alpha=" << short_double(c.alpha) << "  n=" << c.n << "\n";
    for (std::size_t k = 0; k < c.weights.size(); ++k) {
        char line[64];
        std::snprintf(line, sizeof line, "%6zu  % .17g\n", k, c.weights[k]);
        out << line;
    }
    print_kv(out, "sum", std::accumulate(c.weights.begin(), c.weights.end(), 0.0));
}

void run_caputo(const Settings& s, std::ostream& out) {
    const auto y = TestFunction::parse(s.fn);
    const int n = intervals_for(s.x, s.h);
    const auto samples = SampledFunction::sample([&y](double t) { return y(t); }, s.h, n);
    const double approx = caputo_approx(parse_scheme(s.scheme), samples, s.alpha);
    const double exact = caputo_series_oracle(y, s.alpha, s.x);
    if (csv_output(s)) {
        out << "x,h,approx,exact,error\n"
            << format_double(s.x) << ',' << format_double(s.h) << ',' << format_double(approx) << ','
            << format_double(exact) << ',' << format_double(std::abs(approx - exact)) << '\n';
        return;
    }
    out << "Caputo derivative of " << y.name() << ", scheme=" << s.scheme << ", alpha=" << short_double(s.alpha)
        << "\n";
    print_kv(out, "x", s.x);
    print_kv(out, "h", s.h);
    print_kv(out, "approx", approx);
    print_kv(out, "exact", exact);
    print_kv(out, "error", std::abs(approx - exact));
}

void run_integral(const Settings& s, std::ostream& out) {
    const auto y = TestFunction::parse(s.fn);
    const int n = intervals_for(s.x, s.h);
    const auto samples = SampledFunction::sample([&y](double t) { return y(t); }, s.h, n);
    const double left = left_riemann_sum(samples, s.alpha).value;
    const double trapezoid = trapezoid_sum(samples, s.alpha).value;
    const double approx = frac_integral_2ma(samples, s.alpha);
    const double exact = frac_integral_oracle(y, s.alpha, s.x);
    if (csv_output(s)) {
        out << "x,h,left_sum,trapezoid_sum,approx,exact,error\n"
            << format_double(s.x) << ',' << format_double(s.h) << ',' << format_double(left) << ','
            << format_double(trapezoid) << ',' << format_double(approx) << ',' << format_double(exact) << ','
            << format_double(std::abs(approx - exact)) << '\n';
        return;
    }
    out << "J^(2-alpha) of " << y.name() << ", alpha=" << short_double(s.alpha) << "\n";
    print_kv(out, "x", s.x);
    print_kv(out, "h", s.h);
    print_kv(out, "left_sum", left);
    print_kv(out, "trapezoid_sum", trapezoid);
    print_kv(out, "approx", approx);
    print_kv(out, "exact", exact);
    print_kv(out, "error", std::abs(approx - exact));
}

void run_relaxation(const Settings& s, std::ostream& out) {
    RelaxationProblem problem;
    std::function<double(double)> exact;
    if (s.benchmark == "reference") {
        problem = relaxation_reference_problem(s.alpha, s.n);
        exact = relaxation_exact_reference;
    } else if (s.benchmark == "decay") {
        problem.alpha = s.alpha;
        problem.B = s.B;
        problem.forcing = [](double) { return 0.0; };
        problem.y0 = s.y0;
        problem.T = s.T;
        problem.N = s.n;
    } else {
        throw DomainError("unknown relaxation benchmark '" + s.benchmark + "' (expected reference or decay)");
    }
    const auto solution = solve_relaxation(problem, parse_scheme(s.scheme));

    double worst = 0.0;
    if (csv_output(s)) out << (exact ? "t,y,exact,error\n" : "t,y\n");
    for (std::size_t i = 0; i < solution.values.size(); ++i) {
        const double t = static_cast<double>(i) * solution.h;
        const double y = solution.values[i];
        if (exact) worst = std::max(worst, std::abs(y - exact(t)));
        if (!csv_output(s)) continue;
        out << format_double(t) << ',' << format_double(y);
        if (exact) out << ',' << format_double(exact(t)) << ',' << format_double(std::abs(y - exact(t)));
        out << '\n';
    }
    if (csv_output(s)) return;
    out << "relaxation (" << s.benchmark << "), scheme=" << s.scheme << ", alpha=" << short_double(s.alpha)
        << ", N=" << problem.N << "\n";
    print_kv(out, "h", solution.h);
    print_kv(out, "y(T)", solution.values.back());
    if (exact) print_kv(out, "max_error", worst);
}

void run_subdiffusion(const Settings& s, std::ostream& out) {
    if (s.benchmark != "reference") throw DomainError("unknown subdiffusion benchmark '" + s.benchmark + "'");
    const auto problem = subdiffusion_reference_problem(s.alpha, s.n, s.m);
    FirstLayer first;
    if (s.first_layer == "taylor") first = FirstLayer::taylor(subdiffusion_reference_ut0);
    else if (s.first_layer != "implicit") throw DomainError("--first-layer must be implicit or taylor");
    const auto field = solve_subdiffusion(problem, parse_scheme(s.scheme), first);

    std::vector<int> layers;
    if (s.layers == "all") {
        layers.resize(static_cast<std::size_t>(field.M()) + 1);
        std::iota(layers.begin(), layers.end(), 0);
    } else if (s.layers == "final") {
        layers.push_back(field.M());
    } else {
        throw DomainError("--layers must be final or all");
    }

    if (csv_output(s)) {
        write_field_csv(out, field, layers);
        return;
    }
    const auto final_layer = field.layer(field.M());
    std::vector<double> exact(final_layer.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
        exact[i] = subdiffusion_exact_reference(static_cast<double>(i) * field.h(), problem.T);
    }
    out << "subdiffusion (reference), scheme=" << s.scheme << ", alpha=" << short_double(s.alpha) << ", N=" << s.n
        << ", M=" << s.m << ", first layer=" << s.first_layer << "\n";
    print_kv(out, "h", field.h());
    print_kv(out, "tau", field.tau());
    print_kv(out, "eta", field.eta());
    print_kv(out, "max_error(t=T)", max_error(final_layer, exact));
}

void run_tables(const Settings& s, std::ostream& out) {
    std::vector<BenchmarkId> ids;
    if (s.table_id == "all") ids = all_benchmarks();
    else ids.push_back(parse_benchmark(s.table_id));

    const auto options = study_options_from_environment();
    std::vector<ConvergenceReport> reports;
    for (const auto id : ids) {
        const auto defaults = benchmark_defaults(id);
        const double alpha = s.table_alpha.value_or(defaults.alpha);
        std::vector<std::optional<SchemeKind>> schemes;
        if (defaults.schemes.empty()) {
            if (s.table_scheme) throw DomainError(std::string(to_string(id)) + " takes no --scheme");
            schemes.emplace_back(std::nullopt);
        } else if (s.table_scheme) {
            schemes.emplace_back(parse_scheme(*s.table_scheme));
        } else {
            schemes.assign(defaults.schemes.begin(), defaults.schemes.end());
        }
        for (const auto& scheme : schemes) {
            reports.push_back(run_study(id, scheme, alpha, defaults.h_list, defaults.coupling, options));
        }
    }

    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i > 0) out << '\n';
        const auto& r = reports[i];
        if (csv_output(s)) {
            // A single report is plain CSV; several are separated by a comment line each.
            if (reports.size() > 1) {
                out << "# " << to_string(r.meta.benchmark);
                if (r.meta.scheme) out << " scheme=" << to_string(*r.meta.scheme);
                out << " alpha=" << short_double(r.meta.alpha) << " coupling=" << to_string(r.meta.coupling)
                    << '\n';
            }
            write_report_csv(out, r);
        } else {
            write_report_pretty(out, r);
        }
    }
}

void add_common(CLI::App* cmd, Settings& s) {
    cmd->add_option("--output", s.output, "Output format")
        ->check(CLI::IsMember({"pretty", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", s.out_path, "Write results to this file instead of standard output");
}

CLI::Option* add_alpha(CLI::App* cmd, Settings& s) {
    return cmd->add_option("--alpha", s.alpha, "Derivative order alpha, 0 < alpha < 1 (dimensionless)")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
}

CLI::Option* add_scheme(CLI::App* cmd, Settings& s) {
    return cmd->add_option("--scheme", s.scheme, "l1: O(h^(2-alpha)) weights sigma; l1z: zeta-corrected O(h^2) weights delta")
        ->check(CLI::IsMember({"l1", "l1z"}))
        ->capture_default_str();
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Caputo derivative approximations, corrected fractional integrals, and fractional "
                 "relaxation/subdiffusion solvers"};
    app.name("fracdiff");
    app.require_subcommand(1);

    auto* coeffs = app.add_subcommand("coeffs", "Print the scheme weights w_0..w_n for one (alpha, n)");
    add_alpha(coeffs, s);
    add_scheme(coeffs, s);
    coeffs->add_option("--n", s.n, "Number of intervals n (>= 1 for l1, >= 2 for l1z)")->capture_default_str();
    add_common(coeffs, s);

    auto* caputo = app.add_subcommand("caputo", "Approximate the Caputo derivative of a test function at x");
    add_alpha(caputo, s);
    add_scheme(caputo, s);
    caputo->add_option("--fn", s.fn, "Test function: cos, log1p, or poly:c0,c1,...")->capture_default_str();
    caputo->add_option("--step", s.h, "Grid step (same units as x); must divide x")->capture_default_str();
    caputo->add_option("--x", s.x, "Evaluation point, 0 < x <= 1.5 (log1p: x <= 1)")->capture_default_str();
    add_common(caputo, s);

    auto* integral = app.add_subcommand("integral", "Second-order approximation of J^(2-alpha) y(x)");
    add_alpha(integral, s);
    integral->add_option("--fn", s.fn, "Test function: cos, log1p, or poly:c0,c1,...")->capture_default_str();
    integral->add_option("--step", s.h, "Grid step; must divide x")->capture_default_str();
    integral->add_option("--x", s.x, "Evaluation point, 0 < x <= 1.5 (log1p: x <= 1)")->capture_default_str();
    add_common(integral, s);

    auto* relaxation = app.add_subcommand("relaxation", "Solve y^(alpha) + B y = F(t) on [0, T]");
    add_alpha(relaxation, s);
    add_scheme(relaxation, s);
    relaxation->add_option("--n", s.n, "Number of time steps N (>= 2); h = T/N")->capture_default_str();
    relaxation->add_option("--benchmark", s.benchmark,
                           "reference: exact solution 1-4t+5t^2 on [0,1], B=1; decay: F=0 with --B, --y0, --T")
        ->check(CLI::IsMember({"reference", "decay"}))
        ->capture_default_str();
    relaxation->add_option("--B", s.B, "Relaxation coefficient B >= 0 (decay benchmark)")->capture_default_str();
    relaxation->add_option("--y0", s.y0, "Initial value y(0) (decay benchmark)")->capture_default_str();
    relaxation->add_option("--T", s.T, "Time horizon T > 0 (decay benchmark)")->capture_default_str();
    add_common(relaxation, s);

    auto* subdiffusion =
        app.add_subcommand("subdiffusion", "Solve the time-fractional subdiffusion benchmark on [0,1]x[0,1]");
    add_alpha(subdiffusion, s);
    add_scheme(subdiffusion, s);
    subdiffusion->add_option("--n", s.n, "Spatial intervals N (>= 3); h = 1/N")->capture_default_str();
    subdiffusion->add_option("--m", s.m, "Time steps M (>= 2); tau = 1/M")->capture_default_str();
    subdiffusion->add_option("--benchmark", s.benchmark, "Benchmark problem (reference: exact solution x^2(1-x)(1-4t+5t^2))")
        ->check(CLI::IsMember({"reference"}))
        ->capture_default_str();
    subdiffusion->add_option("--first-layer", s.first_layer, "implicit: solve at t=tau; taylor: u0 + tau*u_t(x,0)")
        ->check(CLI::IsMember({"implicit", "taylor"}))
        ->capture_default_str();
    subdiffusion->add_option("--layers", s.layers, "Layers written in csv output: final or all")
        ->check(CLI::IsMember({"final", "all"}))
        ->capture_default_str();
    add_common(subdiffusion, s);

    auto* tables = app.add_subcommand("tables", "Regenerate a convergence table (error, ratio, order per step h)");
    tables->add_option("--id", s.table_id,
                       "table1, table2-cos, table2-log, table3-cos, table3-log, table4, table5, table6, table7, or all")
        ->capture_default_str();
    tables->add_option("--scheme", s.table_scheme, "Restrict to one scheme (l1 or l1z); default: the table's columns")
        ->check(CLI::IsMember({"l1", "l1z"}));
    tables->add_option("--alpha", s.table_alpha, "Override the table's alpha")->check(CLI::Range(0.0, 1.0));
    add_common(tables, s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        // Subcommand --help surfaces as CallForHelp with the subcommand selected.
        err << "fracdiff: " << e.what() << "\n";
        err << "Run with --help for usage.\n";
        return kExitUsage;
    }

    std::ostringstream buffer;
    try {
        if (*coeffs) run_coeffs(s, buffer);
        else if (*caputo) run_caputo(s, buffer);
        else if (*integral) run_integral(s, buffer);
        else if (*relaxation) run_relaxation(s, buffer);
        else if (*subdiffusion) run_subdiffusion(s, buffer);
        else if (*tables) run_tables(s, buffer);
    } catch (const DomainError& e) {
        err << "fracdiff: invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "fracdiff: numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }

    if (s.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(s.out_path, std::ios::binary);
        if (!file) {
            err << "fracdiff: cannot open '" << s.out_path << "' for writing\n";
            return kExitUsage;
        }
        file << buffer.str();
    }
    return 0;
}

} // namespace fracdiff
