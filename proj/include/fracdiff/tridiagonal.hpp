#pragma once

#include <vector>

namespace fracdiff {

/// A x = rhs with A tridiagonal of dimension m: lower and upper have m − 1
/// entries (lower[i] is A(i+1, i), upper[i] is A(i, i+1)).
struct TridiagonalSystem {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;
    std::vector<double> rhs;

    int size() const { return static_cast<int>(diag.size()); }

    /// Strict row diagonal dominance |diag_i| > |lower_{i−1}| + |upper_i|.
    bool strictly_diagonally_dominant() const;
};

/// Thomas algorithm (forward elimination, back substitution) without pivoting.
/// Throws NumericalError when a pivot drops below 1e−14 in magnitude and
/// DomainError on inconsistent lengths.
std::vector<double> thomas_solve(const TridiagonalSystem& system);

} // namespace fracdiff
