#pragma once

#include <cstddef>
#include <vector>

namespace fracdiff {

/// Gamma function for x > 0. Lanczos approximation (g = 7, 9 terms), with the
/// recurrence Γ(x) = Γ(x + 1) / x used below x = 0.5.
double gamma(double x);

/// Riemann zeta function on the real line, s ≠ 1.
///
/// Evaluated with the globally convergent alternating double series
///
///     ζ(s) = 1 / (1 − 2^{1−s}) · Σ_{n≥0} 2^{−(n+1)} Σ_{k=0}^{n} (−1)^k C(n,k) (k+1)^{−s}
///
/// truncated after 64 outer terms. The inner sums are accumulated in long
/// double; the 2^{−(n+1)} weight offsets the cancellation growth of the
/// binomial sums, so the absolute error stays near 1e−14 on [−2, 3].
double zeta(double s);

/// ζ(α−1)/Γ(2−α) via the functional equation,
/// −2^{α−1} π^{α−2} cos(πα/2) ζ(2−α). Strictly negative on (0, 1).
double zeta_ratio(double alpha);

/// Generalized binomial coefficient a(a−1)…(a−m+1)/m!.
double binomial_real(double a, int m);

/// Bernoulli numbers B_0..B_{max_index} with the B_1 = −1/2 convention.
class BernoulliTable {
public:
    static constexpr int kDefaultMaxIndex = 30;

    explicit BernoulliTable(int max_index = kDefaultMaxIndex);

    double operator[](int m) const { return values_.at(static_cast<std::size_t>(m)); }
    int max_index() const { return static_cast<int>(values_.size()) - 1; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

/// Shared immutable table, built once.
const BernoulliTable& bernoulli_table();

/// Asymptotic expansion of Σ_{k=1}^{n−1} k^β:
///
///     ζ(−β) + n^{β+1}/(β+1) · Σ_{m=0}^{terms} C(β+1, m) B_m / n^m
///
/// `terms` is a cap on the Bernoulli index; the series is asymptotic and is
/// never extended past it.
double power_sum_asymptotic(double beta, int n, int terms = 4);

} // namespace fracdiff
