#include "fracdiff/tridiagonal.hpp"

#include "fracdiff/errors.hpp"

#include <cmath>

namespace fracdiff {

namespace {
constexpr double kMinPivot = 1e-14;
}

bool TridiagonalSystem::strictly_diagonally_dominant() const {
    const int m = size();
    for (int i = 0; i < m; ++i) {
        const auto u = static_cast<std::size_t>(i);
        double off = 0.0;
        if (i > 0) off += std::abs(lower[u - 1]);
        if (i + 1 < m) off += std::abs(upper[u]);
        if (!(std::abs(diag[u]) > off)) return false;
    }
    return true;
}

std::vector<double> thomas_solve(const TridiagonalSystem& s) {
    const std::size_t m = s.diag.size();
    detail::require(m >= 1, "tridiagonal system must be non-empty");
    detail::require(s.lower.size() == m - 1 && s.upper.size() == m - 1 && s.rhs.size() == m,
                    "tridiagonal system has inconsistent lengths");

    std::vector<double> c(m, 0.0); // modified upper diagonal
    std::vector<double> x(m, 0.0);

    double pivot = s.diag[0];
    if (std::abs(pivot) < kMinPivot) throw NumericalError("tridiagonal solve: pivot breakdown at row 0");
    if (m > 1) c[0] = s.upper[0] / pivot;
    x[0] = s.rhs[0] / pivot;
    for (std::size_t i = 1; i < m; ++i) {
        pivot = s.diag[i] - s.lower[i - 1] * c[i - 1];
        if (std::abs(pivot) < kMinPivot) {
            throw NumericalError("tridiagonal solve: pivot breakdown at row " + std::to_string(i));
        }
        if (i + 1 < m) c[i] = s.upper[i] / pivot;
        x[i] = (s.rhs[i] - s.lower[i - 1] * x[i - 1]) / pivot;
    }
    for (std::size_t i = m - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    return x;
}

} // namespace fracdiff
