#include "fracdiff/relaxation.hpp"

#include "fracdiff/errors.hpp"
#include "fracdiff/special_functions.hpp"

#include <cmath>

namespace fracdiff {

RelaxationSolution solve_relaxation(const RelaxationProblem& p, SchemeKind kind) {
    detail::require_fractional_order(p.alpha);
    detail::require(p.B >= 0.0, "relaxation coefficient B must be non-negative");
    detail::require(p.T > 0.0, "time horizon must be positive");
    detail::require(p.N >= 2, "relaxation solve needs N >= 2 steps");
    detail::require(static_cast<bool>(p.forcing), "relaxation problem has no forcing");

    const double h = p.step();
    const double scale = gamma(2.0 - p.alpha) * std::pow(h, p.alpha);
    const HistoryWeights weights(kind, p.alpha, p.N);

    RelaxationSolution out{h, kind, std::vector<double>(static_cast<std::size_t>(p.N) + 1, 0.0)};
    auto& y = out.values;
    y[0] = p.y0;
    // For L1 the general update at n = 1 is the same formula (σ_0 = 1, σ_1 = −1).
    y[1] = (y[0] + scale * p.forcing(h)) / (1.0 + p.B * scale);
    for (int n = 2; n <= p.N; ++n) {
        const double t = static_cast<double>(n) * h;
        const double history = weights.history_sum(n, y);
        y[static_cast<std::size_t>(n)] = (scale * p.forcing(t) - history) / (weights.weight(n, 0) + p.B * scale);
    }
    return out;
}

double relaxation_exact_reference(double t) { return 1.0 - 4.0 * t + 5.0 * t * t; }

double relaxation_reference_forcing(double alpha, double t) {
    return 1.0 - 4.0 * t + 5.0 * t * t - 4.0 * std::pow(t, 1.0 - alpha) / gamma(2.0 - alpha) +
           10.0 * std::pow(t, 2.0 - alpha) / gamma(3.0 - alpha);
}

RelaxationProblem relaxation_reference_problem(double alpha, int N) {
    detail::require_fractional_order(alpha);
    RelaxationProblem p;
    p.alpha = alpha;
    p.B = 1.0;
    p.forcing = [alpha](double t) { return relaxation_reference_forcing(alpha, t); };
    p.y0 = relaxation_exact_reference(0.0);
    p.T = 1.0;
    p.N = N;
    return p;
}

} // namespace fracdiff
