#pragma once

#include <stdexcept>
#include <string>

namespace fracdiff {

/// Argument outside the domain of an operation (bad alpha, grid too small, pole).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A numerical procedure failed to produce a result: series that did not
/// converge within its term cap, or a vanishing pivot in a linear solve.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require(bool condition, const char* message) {
    if (!condition) throw DomainError(message);
}

// 0 < alpha < 1, the only order range the schemes are defined for.
inline void require_fractional_order(double alpha) {
    require(alpha > 0.0 && alpha < 1.0, "alpha must lie in the open interval (0, 1)");
}

} // namespace detail
} // namespace fracdiff
