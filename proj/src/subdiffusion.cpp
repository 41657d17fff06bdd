#include "fracdiff/subdiffusion.hpp"

#include "fracdiff/csv.hpp"
#include "fracdiff/errors.hpp"
#include "fracdiff/special_functions.hpp"
#include "fracdiff/tridiagonal.hpp"

#include <cmath>
#include <ostream>

namespace fracdiff {

namespace {

constexpr double kCompatibilityTolerance = 1e-10;

void validate(const SubdiffusionProblem& p) {
    detail::require_fractional_order(p.alpha);
    detail::require(p.N >= 3, "subdiffusion solve needs N >= 3 spatial intervals");
    detail::require(p.M >= 2, "subdiffusion solve needs M >= 2 time steps");
    detail::require(p.T > 0.0 && p.L > 0.0, "domain lengths must be positive");
    detail::require(p.u0 && p.uL && p.uR && p.forcing, "subdiffusion problem is missing a callable");
    detail::require(std::abs(p.u0(0.0) - p.uL(0.0)) <= kCompatibilityTolerance &&
                        std::abs(p.u0(p.L) - p.uR(0.0)) <= kCompatibilityTolerance,
                    "initial and boundary data are incompatible at t = 0");
}

// Interior system with constant diagonal and off-diagonal −η; the boundary
// values enter the first and last rows as +η·u.
std::vector<double> solve_layer(double diag, double eta, std::vector<double> rhs, double left, double right) {
    const std::size_t m = rhs.size();
    rhs.front() += eta * left;
    rhs.back() += eta * right;
    TridiagonalSystem system{std::vector<double>(m - 1, -eta), std::vector<double>(m, diag),
                             std::vector<double>(m - 1, -eta), std::move(rhs)};
    return thomas_solve(system);
}

} // namespace

double SubdiffusionProblem::eta() const {
    return gamma(2.0 - alpha) * std::pow(tau(), alpha) / (h() * h());
}

FieldHistory::FieldHistory(int N, int M, double h, double tau, double eta)
    : N_(N), M_(M), h_(h), tau_(tau), eta_(eta),
      data_(static_cast<std::size_t>(M + 1) * static_cast<std::size_t>(N + 1), 0.0) {}

std::span<double> FieldHistory::layer(int m) {
    return {data_.data() + index(m, 0), static_cast<std::size_t>(N_ + 1)};
}

std::span<const double> FieldHistory::layer(int m) const {
    return {data_.data() + index(m, 0), static_cast<std::size_t>(N_ + 1)};
}

std::vector<double> first_layer_implicit(const SubdiffusionProblem& p) {
    validate(p);
    const double h = p.h();
    const double tau = p.tau();
    const double eta = p.eta();
    const double scale = gamma(2.0 - p.alpha) * std::pow(tau, p.alpha);

    std::vector<double> rhs(static_cast<std::size_t>(p.N) - 1);
    for (int n = 1; n < p.N; ++n) {
        const double x = n * h;
        rhs[static_cast<std::size_t>(n) - 1] = p.u0(x) + scale * p.forcing(x, tau);
    }
    const double left = p.uL(tau);
    const double right = p.uR(tau);
    const auto interior = solve_layer(1.0 + 2.0 * eta, eta, std::move(rhs), left, right);

    std::vector<double> out(static_cast<std::size_t>(p.N) + 1);
    out.front() = left;
    out.back() = right;
    std::copy(interior.begin(), interior.end(), out.begin() + 1);
    return out;
}

std::vector<double> first_layer_taylor(const SubdiffusionProblem& p, const std::function<double(double)>& ut0) {
    validate(p);
    detail::require(static_cast<bool>(ut0), "Taylor first layer needs u_t(x, 0)");
    const double h = p.h();
    const double tau = p.tau();
    std::vector<double> out(static_cast<std::size_t>(p.N) + 1);
    out.front() = p.uL(tau);
    out.back() = p.uR(tau);
    for (int n = 1; n < p.N; ++n) {
        const double x = n * h;
        out[static_cast<std::size_t>(n)] = p.u0(x) + tau * ut0(x);
    }
    return out;
}

FieldHistory solve_subdiffusion(const SubdiffusionProblem& p, SchemeKind kind, const FirstLayer& first_layer) {
    validate(p);
    const int N = p.N;
    const int M = p.M;
    const double h = p.h();
    const double tau = p.tau();
    const double eta = p.eta();
    const double scale = gamma(2.0 - p.alpha) * std::pow(tau, p.alpha);
    const HistoryWeights weights(kind, p.alpha, M);

    FieldHistory field(N, M, h, tau, eta);
    for (int n = 0; n <= N; ++n) field.at(0, n) = p.u0(n * h);
    field.at(0, 0) = p.uL(0.0);
    field.at(0, N) = p.uR(0.0);

    const auto layer1 = first_layer.kind == FirstLayer::Kind::Taylor ? first_layer_taylor(p, first_layer.ut0)
                                                                     : first_layer_implicit(p);
    std::copy(layer1.begin(), layer1.end(), field.layer(1).begin());

    const auto interior = static_cast<std::size_t>(N) - 1;
    std::vector<double> rhs(interior);
    for (int m = 2; m <= M; ++m) {
        const double t = m * tau;
        for (int n = 1; n < N; ++n) rhs[static_cast<std::size_t>(n) - 1] = scale * p.forcing(n * h, t);
        for (int k = 1; k <= m; ++k) {
            const double w = weights.weight(m, k);
            const auto previous = field.layer(m - k);
            for (std::size_t i = 0; i < interior; ++i) rhs[i] -= w * previous[i + 1];
        }
        const double left = p.uL(t);
        const double right = p.uR(t);
        // The ζ shift of L1Z is already inside w_0 = 1 − ζ(α−1).
        const auto solved = solve_layer(weights.weight(m, 0) + 2.0 * eta, eta, rhs, left, right);
        auto layer = field.layer(m);
        layer.front() = left;
        layer.back() = right;
        std::copy(solved.begin(), solved.end(), layer.begin() + 1);
    }
    return field;
}

double subdiffusion_exact_reference(double x, double t) {
    return x * x * (1.0 - x) * (1.0 - 4.0 * t + 5.0 * t * t);
}

double subdiffusion_reference_forcing(double alpha, double x, double t) {
    const double time_part = 5.0 * t * t - 4.0 * t + 1.0;
    const double caputo_time_part =
        10.0 * std::pow(t, 2.0 - alpha) / gamma(3.0 - alpha) - 4.0 * std::pow(t, 1.0 - alpha) / gamma(2.0 - alpha);
    return -2.0 * (1.0 - 3.0 * x) * time_part + x * x * (1.0 - x) * caputo_time_part;
}

double subdiffusion_reference_ut0(double x) { return -4.0 * x * x * (1.0 - x); }

SubdiffusionProblem subdiffusion_reference_problem(double alpha, int N, int M) {
    detail::require_fractional_order(alpha);
    SubdiffusionProblem p;
    p.alpha = alpha;
    p.u0 = [](double x) { return subdiffusion_exact_reference(x, 0.0); };
    p.uL = [](double) { return 0.0; };
    p.uR = [](double) { return 0.0; };
    p.forcing = [alpha](double x, double t) { return subdiffusion_reference_forcing(alpha, x, t); };
    p.N = N;
    p.M = M;
    return p;
}

void write_field_csv(std::ostream& out, const FieldHistory& field, std::span<const int> layers) {
    for (int n = 0; n <= field.N(); ++n) out << (n ? "," : "") << "x_" << n;
    out << '\n';
    for (const int m : layers) {
        detail::require(m >= 0 && m <= field.M(), "requested layer is outside the field history");
        const auto row = field.layer(m);
        for (std::size_t n = 0; n < row.size(); ++n) out << (n ? "," : "") << format_double(row[n]);
        out << '\n';
    }
}

} // namespace fracdiff
