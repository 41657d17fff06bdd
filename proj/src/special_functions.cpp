#include "fracdiff/special_functions.hpp"

#include "fracdiff/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace fracdiff {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_gamma(double x) {
    // Valid for x >= 0.5.
    const double z = x - 1.0;
    double series = kLanczosCoefficients[0];
    for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
        series += kLanczosCoefficients[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

constexpr int kZetaOuterTerms = 64;

} // namespace

double gamma(double x) {
    detail::require(x > 0.0, "gamma: argument must be positive");
    detail::require(std::isfinite(x), "gamma: argument must be finite");
    if (x < 0.5) return lanczos_gamma(x + 1.0) / x;
    return lanczos_gamma(x);
}

double zeta(double s) {
    detail::require(std::isfinite(s), "zeta: argument must be finite");
    detail::require(s != 1.0, "zeta: pole at s = 1");

    const long double ls = s;
    // Powers (k+1)^{-s} are shared by every inner sum.
    std::array<long double, kZetaOuterTerms> powers{};
    for (int k = 0; k < kZetaOuterTerms; ++k) {
        powers[static_cast<std::size_t>(k)] = std::pow(static_cast<long double>(k + 1), -ls);
    }

    long double total = 0.0L;
    long double weight = 0.5L; // 2^{-(n+1)}
    for (int n = 0; n < kZetaOuterTerms; ++n) {
        long double inner = 0.0L;
        long double binom = 1.0L; // C(n, k), exact in the 64-bit mantissa
        for (int k = 0; k <= n; ++k) {
            const long double term = binom * powers[static_cast<std::size_t>(k)];
            inner += (k % 2 == 0) ? term : -term;
            binom = binom * static_cast<long double>(n - k) / static_cast<long double>(k + 1);
        }
        total += weight * inner;
        weight *= 0.5L;
    }
    const long double prefactor = 1.0L - std::pow(2.0L, 1.0L - ls);
    return static_cast<double>(total / prefactor);
}

double zeta_ratio(double alpha) {
    detail::require_fractional_order(alpha);
    using std::numbers::pi;
    return -std::pow(2.0, alpha - 1.0) * std::pow(pi, alpha - 2.0) * std::cos(pi * alpha / 2.0) *
           zeta(2.0 - alpha);
}

double binomial_real(double a, int m) {
    detail::require(m >= 0, "binomial_real: m must be non-negative");
    double result = 1.0;
    for (int i = 0; i < m; ++i) {
        result *= (a - static_cast<double>(i)) / static_cast<double>(i + 1);
    }
    return result;
}

BernoulliTable::BernoulliTable(int max_index) {
    detail::require(max_index >= 1, "BernoulliTable: max_index must be at least 1");
    // Σ_{k=0}^{m} C(m+1, k) B_k = 0 for m ≥ 1, which yields B_1 = -1/2.
    std::vector<long double> b(static_cast<std::size_t>(max_index) + 1, 0.0L);
    b[0] = 1.0L;
    for (int m = 1; m <= max_index; ++m) {
        if (m > 1 && m % 2 == 1) continue; // odd indices above 1 vanish
        long double acc = 0.0L;
        long double binom = 1.0L; // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            acc += binom * b[static_cast<std::size_t>(k)];
            binom = binom * static_cast<long double>(m + 1 - k) / static_cast<long double>(k + 1);
        }
        b[static_cast<std::size_t>(m)] = -acc / static_cast<long double>(m + 1);
    }
    values_.assign(b.begin(), b.end());
}

const BernoulliTable& bernoulli_table() {
    static const BernoulliTable table;
    return table;
}

double power_sum_asymptotic(double beta, int n, int terms) {
    detail::require(beta != -1.0, "power_sum_asymptotic: beta = -1 (harmonic sum) is not supported");
    detail::require(n >= 2, "power_sum_asymptotic: n must be at least 2");
    const BernoulliTable& bernoulli = bernoulli_table();
    detail::require(terms >= 0 && terms <= bernoulli.max_index(),
                    "power_sum_asymptotic: term count outside the Bernoulli table");

    const double nd = static_cast<double>(n);
    double series = 0.0;
    double inv_power = 1.0; // n^{-m}
    for (int m = 0; m <= terms; ++m) {
        series += binomial_real(beta + 1.0, m) * bernoulli[m] * inv_power;
        inv_power /= nd;
    }
    return zeta(-beta) + std::pow(nd, beta + 1.0) / (beta + 1.0) * series;
}

} // namespace fracdiff
