#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fracdiff {

/// Samples y_0..y_N of a function on the uniform grid origin + n·h.
class SampledFunction {
public:
    SampledFunction(double h, std::vector<double> values, double origin = 0.0);

    /// Samples `fn` at origin + n·h for n = 0..intervals.
    static SampledFunction sample(const std::function<double(double)>& fn, double h, int intervals,
                                  double origin = 0.0);

    double h() const { return h_; }
    double origin() const { return origin_; }
    /// Number of intervals N (values().size() − 1).
    int intervals() const { return static_cast<int>(values_.size()) - 1; }
    double length() const { return h_ * intervals(); }
    double end() const { return origin_ + length(); }
    std::span<const double> values() const { return values_; }
    double operator[](int n) const { return values_[static_cast<std::size_t>(n)]; }

private:
    double h_;
    double origin_;
    std::vector<double> values_;
};

} // namespace fracdiff
