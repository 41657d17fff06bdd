#pragma once

#include "fracdiff/caputo.hpp"

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace fracdiff {

/// ∂^α u/∂t^α = ∂²u/∂x² + F(x, t) on [0, L] × [0, T] with
/// u(x, 0) = u0(x), u(0, t) = uL(t), u(L, t) = uR(t).
struct SubdiffusionProblem {
    double alpha = 0.5;
    std::function<double(double)> u0;
    std::function<double(double)> uL;
    std::function<double(double)> uR;
    std::function<double(double, double)> forcing;
    int N = 3; ///< spatial intervals
    int M = 2; ///< time steps
    double T = 1.0;
    double L = 1.0;

    double h() const { return L / static_cast<double>(N); }
    double tau() const { return T / static_cast<double>(M); }
    /// Γ(2−α) τ^α / h²
    double eta() const;
};

/// Numerical field U[m][n] ≈ u(n h, m τ), m = 0..M, n = 0..N, stored row-major.
class FieldHistory {
public:
    FieldHistory(int N, int M, double h, double tau, double eta);

    int N() const { return N_; }
    int M() const { return M_; }
    double h() const { return h_; }
    double tau() const { return tau_; }
    double eta() const { return eta_; }

    std::span<double> layer(int m);
    std::span<const double> layer(int m) const;
    double at(int m, int n) const { return data_[index(m, n)]; }
    double& at(int m, int n) { return data_[index(m, n)]; }

private:
    std::size_t index(int m, int n) const {
        return static_cast<std::size_t>(m) * static_cast<std::size_t>(N_ + 1) + static_cast<std::size_t>(n);
    }

    int N_;
    int M_;
    double h_;
    double tau_;
    double eta_;
    std::vector<double> data_;
};

/// How the layer at t = τ is produced.
struct FirstLayer {
    enum class Kind { Implicit, Taylor };

    Kind kind = Kind::Implicit;
    std::function<double(double)> ut0; ///< u_t(x, 0), Taylor only

    static FirstLayer implicit() { return {}; }
    static FirstLayer taylor(std::function<double(double)> ut0) { return {Kind::Taylor, std::move(ut0)}; }
};

/// Implicit first layer: (1+2η) on the diagonal, −η off it, right-hand side
/// u0(nh) + Γ(2−α)τ^α F(nh, τ) plus η·uL(τ), η·uR(τ) in the end rows.
/// Returns the full layer U_0..U_N including boundary values.
std::vector<double> first_layer_implicit(const SubdiffusionProblem& problem);

/// Taylor first layer U_n = u0(nh) + τ·ut0(nh) at interior nodes, boundary
/// values from uL(τ), uR(τ).
std::vector<double> first_layer_taylor(const SubdiffusionProblem& problem,
                                       const std::function<double(double)>& ut0);

/// Implicit solve over all M layers. For m ≥ 2 each layer solves the
/// tridiagonal system with diagonal w_0 + 2η, off-diagonals −η, and rows
/// −Σ_{k=1}^{m} w_k U_n^{m−k} + Γ(2−α)τ^α F_n^m (w = δ for L1Z, σ for L1).
FieldHistory solve_subdiffusion(const SubdiffusionProblem& problem, SchemeKind kind,
                                const FirstLayer& first_layer = FirstLayer::implicit());

/// Benchmark with exact solution u = x²(1−x)(1 − 4t + 5t²) on [0,1]², zero
/// boundary values.
SubdiffusionProblem subdiffusion_reference_problem(double alpha, int N, int M);
double subdiffusion_exact_reference(double x, double t);
/// Forcing consistent with the reference solution:
/// −2(1−3x)(5t² − 4t + 1) + x²(1−x)(10t^{2−α}/Γ(3−α) − 4t^{1−α}/Γ(2−α)).
double subdiffusion_reference_forcing(double alpha, double x, double t);
/// u_t(x, 0) of the reference solution, −4x²(1−x).
double subdiffusion_reference_ut0(double x);

/// CSV with header x_0,…,x_N and one row per requested layer, 17 significant digits.
void write_field_csv(std::ostream& out, const FieldHistory& field, std::span<const int> layers);

} // namespace fracdiff
