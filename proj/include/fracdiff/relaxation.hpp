#pragma once

#include "fracdiff/caputo.hpp"

#include <functional>
#include <vector>

namespace fracdiff {

/// y^{(α)}(t) + B·y(t) = F(t) on [0, T], y(0) = y0, solved on N uniform steps.
///
/// When the exact solution is continuously differentiable and B > 0 the
/// initial value is forced to y0 = F(0)/B; this is not checked.
struct RelaxationProblem {
    double alpha = 0.5;
    double B = 1.0;
    std::function<double(double)> forcing;
    double y0 = 0.0;
    double T = 1.0;
    int N = 2;

    double step() const { return T / static_cast<double>(N); }
};

struct RelaxationSolution {
    double h = 0.0;
    SchemeKind scheme = SchemeKind::L1;
    std::vector<double> values; ///< ỹ_0..ỹ_N at t_n = n·h
};

/// Explicit time stepping. Step 1 uses the one-interval formula
/// ỹ_1 = (ỹ_0 + Γ(2−α)h^α F_1) / (1 + B Γ(2−α)h^α); for n ≥ 2
///
///     ỹ_n = (Γ(2−α)h^α F_n − Σ_{k=1}^{n} w_k ỹ_{n−k}) / (w_0 + B Γ(2−α)h^α)
///
/// with w = δ for L1Z and w = σ for L1. Cost O(N²).
RelaxationSolution solve_relaxation(const RelaxationProblem& problem, SchemeKind kind);

/// Benchmark with exact solution y(t) = 1 − 4t + 5t², B = 1, y(0) = 1.
double relaxation_exact_reference(double t);

/// Forcing that makes relaxation_exact_reference the solution for B = 1:
/// 1 − 4t + 5t² − 4t^{1−α}/Γ(2−α) + 10t^{2−α}/Γ(3−α).
double relaxation_reference_forcing(double alpha, double t);

/// The benchmark problem on [0, 1] with N steps.
RelaxationProblem relaxation_reference_problem(double alpha, int N);

} // namespace fracdiff
