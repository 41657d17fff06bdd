#pragma once

#include "fracdiff/grid.hpp"
#include "fracdiff/test_functions.hpp"

#include <string_view>
#include <vector>

namespace fracdiff {

/// Discretization of the Caputo derivative of order α ∈ (0, 1).
enum class SchemeKind {
    L1,  ///< piecewise-linear L1 weights σ_k, accuracy O(h^{2−α})
    L1Z, ///< L1 with the first three weights shifted by ζ(α−1), accuracy O(h²)
};

std::string_view to_string(SchemeKind kind);
SchemeKind parse_scheme(std::string_view text);

/// The weights w_0..w_n of one scheme for one (α, n) pair. The approximate
/// derivative at x_n is Σ w_k y_{n−k} / (Γ(2−α) h^α).
struct SchemeCoefficients {
    double alpha = 0.0;
    int n = 0;
    SchemeKind kind = SchemeKind::L1;
    std::vector<double> weights;
};

/// σ_0 = 1, σ_k = (k+1)^{1−α} − 2k^{1−α} + (k−1)^{1−α} for 1 ≤ k < n,
/// σ_n = (n−1)^{1−α} − n^{1−α}. Requires n ≥ 1.
SchemeCoefficients sigma_coefficients(double alpha, int n);

/// δ_0 = σ_0 − ζ(α−1), δ_1 = σ_1 + 2ζ(α−1), δ_2 = σ_2 − ζ(α−1), δ_k = σ_k
/// for k ≥ 3. Requires n ≥ 2; at n = 2 the correction lands on the boundary
/// weight σ_2 = 1 − 2^{1−α}.
SchemeCoefficients delta_coefficients(double alpha, int n);

SchemeCoefficients scheme_coefficients(SchemeKind kind, double alpha, int n);

/// Weights for every step n of a time-stepping solve without rebuilding the
/// whole vector per step: the interior σ_k do not depend on n, only the last
/// weight (and, for L1Z, the ζ shift on the first three) does.
class HistoryWeights {
public:
    HistoryWeights(SchemeKind kind, double alpha, int max_n);

    SchemeKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    int max_n() const { return max_n_; }

    /// w_k of the n-step scheme, 0 ≤ k ≤ n ≤ max_n. For L1Z, n ≥ 2.
    double weight(int n, int k) const;

    /// Σ_{k=1}^{n} w_k history[n−k], where history[j] is the value at step j.
    double history_sum(int n, std::span<const double> history) const;

private:
    SchemeKind kind_;
    double alpha_;
    int max_n_;
    double zeta_shift_ = 0.0;       // ζ(α−1) for L1Z, 0 for L1
    std::vector<double> interior_;  // σ_k by the three-term formula, k = 0..max_n
    std::vector<double> boundary_;  // (n−1)^{1−α} − n^{1−α}, n = 0..max_n
};

/// Approximate Caputo derivative at the last sample of `y` with weights σ.
double caputo_l1(const SampledFunction& y, double alpha);

/// Approximate Caputo derivative at the last sample of `y` with weights δ.
/// Requires at least two intervals.
double caputo_l1z(const SampledFunction& y, double alpha);

double caputo_approx(SchemeKind kind, const SampledFunction& y, double alpha);

/// (y1 − y0) / (Γ(2−α) h^α): the one-interval approximation of y^{(α)}(h).
double caputo_first_step(double y0, double y1, double alpha, double h);

/// Caputo derivative of order α of a reference function at x ∈ (0, 1.5],
/// by term-wise differentiation of its Taylor series.
double caputo_series_oracle(const TestFunction& y, double alpha, double x);

} // namespace fracdiff
