#include "fracdiff/errors.hpp"
#include "fracdiff/special_functions.hpp"
#include "fracdiff/test_functions.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace fracdiff {

namespace {

constexpr double kTermTolerance = 1e-15;
constexpr int kMaxTerms = 1000;
constexpr int kAcceleratedTerms = 40;

// Falling product (k+1)(k+2)…(k+d).
double rising_from(int k, int d) {
    double p = 1.0;
    for (int i = 1; i <= d; ++i) p *= static_cast<double>(k + i);
    return p;
}

std::vector<double> differentiate(const std::vector<double>& c) {
    if (c.size() <= 1) return {0.0};
    std::vector<double> out(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = static_cast<double>(k) * c[k];
    return out;
}

// Σ_{j≥0} (−1)^j b_j for a moment sequence b (Cohen, Rodriguez Villegas, Zagier, Algorithm 1).
template <typename Term>
double accelerated_alternating_sum(Term&& b, int n) {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double bb = -1.0;
    double c = -d;
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = bb - c;
        s += c * b(k);
        const double kd = static_cast<double>(k);
        const double nd = static_cast<double>(n);
        bb = (kd + nd) * (kd - nd) * bb / ((kd + 0.5) * (kd + 1.0));
    }
    return s / d;
}

} // namespace

TestFunction::TestFunction(Kind kind, int order, std::vector<double> coefficients)
    : kind_(kind), order_(order), poly_(std::move(coefficients)) {}

TestFunction TestFunction::cosine() { return {Kind::Cos, 0, {}}; }

TestFunction TestFunction::log1p() { return {Kind::Log1p, 0, {}}; }

TestFunction TestFunction::polynomial(std::vector<double> coefficients) {
    if (coefficients.empty()) coefficients.push_back(0.0);
    return {Kind::Polynomial, 0, std::move(coefficients)};
}

TestFunction TestFunction::parse(std::string_view id) {
    if (id == "cos") return cosine();
    if (id == "log1p" || id == "log") return log1p();
    if (id.starts_with("poly:")) {
        std::vector<double> coefficients;
        std::string_view rest = id.substr(5);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string token(rest.substr(0, comma));
            std::istringstream in(token);
            in.imbue(std::locale::classic());
            double value = 0.0;
            in >> value;
            if (in.fail() || !in.eof()) throw DomainError("invalid polynomial coefficient '" + token + "'");
            coefficients.push_back(value);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (coefficients.empty()) throw DomainError("polynomial needs at least one coefficient");
        return polynomial(std::move(coefficients));
    }
    throw DomainError("unknown test function '" + std::string(id) + "' (expected cos, log1p, poly:c0,c1,...)");
}

std::string TestFunction::name() const {
    std::string base;
    switch (kind_) {
    case Kind::Cos: base = "cos"; break;
    case Kind::Log1p: base = "log1p"; break;
    case Kind::Polynomial: base = "poly"; break;
    }
    if (order_ > 0) base += "^(" + std::to_string(order_) + ")";
    return base;
}

double TestFunction::operator()(double x) const {
    switch (kind_) {
    case Kind::Cos:
        return std::cos(x + static_cast<double>(order_) * std::numbers::pi / 2.0);
    case Kind::Log1p: {
        if (order_ == 0) return std::log1p(x);
        // d-th derivative: (−1)^{d−1} (d−1)! / (1+x)^d
        double fact = 1.0;
        for (int i = 2; i < order_; ++i) fact *= static_cast<double>(i);
        const double sign = (order_ % 2 == 1) ? 1.0 : -1.0;
        return sign * fact / std::pow(1.0 + x, order_);
    }
    case Kind::Polynomial: {
        double acc = 0.0;
        for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

TestFunction TestFunction::derivative(int extra) const {
    detail::require(extra >= 0, "derivative order must be non-negative");
    TestFunction out = *this;
    out.order_ += extra;
    if (kind_ == Kind::Polynomial) {
        for (int i = 0; i < extra; ++i) out.poly_ = differentiate(out.poly_);
    }
    return out;
}

double TestFunction::taylor_coefficient(int k) const {
    detail::require(k >= 0, "Taylor index must be non-negative");
    switch (kind_) {
    case Kind::Cos: {
        // cos: a_j = (−1)^{j/2}/j! for even j; the d-th derivative shifts by d.
        const int j = k + order_;
        if (j % 2 != 0) return 0.0;
        double fact = 1.0;
        for (int i = 2; i <= k; ++i) fact *= static_cast<double>(i);
        return ((j / 2) % 2 == 0 ? 1.0 : -1.0) / fact;
    }
    case Kind::Log1p: {
        // log1p: a_j = (−1)^{j+1}/j for j ≥ 1.
        const int j = k + order_;
        if (j == 0) return 0.0;
        const double base = ((j + 1) % 2 == 0 ? 1.0 : -1.0) / static_cast<double>(j);
        return base * rising_from(k, order_);
    }
    case Kind::Polynomial:
        return k < static_cast<int>(poly_.size()) ? poly_[static_cast<std::size_t>(k)] : 0.0;
    }
    return 0.0;
}

int TestFunction::degree() const {
    if (kind_ != Kind::Polynomial) return -1;
    return static_cast<int>(poly_.size()) - 1;
}

double TestFunction::radius() const {
    switch (kind_) {
    case Kind::Cos:
    case Kind::Polynomial: return std::numeric_limits<double>::infinity();
    case Kind::Log1p: return 1.0;
    }
    return 0.0;
}

bool TestFunction::alternating_moments() const { return kind_ == Kind::Log1p && order_ == 0; }

double fractional_power_series(const TestFunction& y, double shift, double x, int first_index) {
    detail::require(first_index >= 0, "series start index must be non-negative");
    detail::require(shift > -1.0, "series shift must exceed -1");
    detail::require(x > 0.0 && x <= 1.5, "oracle point must lie in (0, 1.5]");
    detail::require(x <= y.radius(), "oracle point lies outside the Taylor radius of the function");

    // g_k = Γ(k+1)/Γ(k+1+shift), advanced by g_{k+1} = g_k (k+1)/(k+1+shift).
    auto advance = [shift](double g, int k) {
        return g * static_cast<double>(k + 1) / (static_cast<double>(k + 1) + shift);
    };
    double g = 1.0 / gamma(1.0 + shift);
    for (int k = 0; k < first_index; ++k) g = advance(g, k);

    if (y.alternating_moments() && first_index <= 1) {
        // log1p: Σ_{k≥1} (−1)^{k+1} g_k x^{k+shift} / k = x^{shift} Σ_{j≥0} (−1)^j b_j.
        std::vector<double> b(kAcceleratedTerms);
        double gk = (first_index == 0) ? advance(g, 0) : g;
        double xk = x;
        for (int j = 0; j < kAcceleratedTerms; ++j) {
            const int k = j + 1;
            b[static_cast<std::size_t>(j)] = gk * xk / static_cast<double>(k);
            gk = advance(gk, k);
            xk *= x;
        }
        return std::pow(x, shift) * accelerated_alternating_sum(
                                        [&b](int j) { return b[static_cast<std::size_t>(j)]; },
                                        kAcceleratedTerms);
    }

    const int degree = y.degree();
    double sum = 0.0;
    double xk = std::pow(x, static_cast<double>(first_index) + shift);
    for (int k = first_index; k < first_index + kMaxTerms; ++k) {
        if (degree >= 0 && k > degree) return sum;
        const double a = y.taylor_coefficient(k);
        if (a != 0.0) {
            const double term = a * g * xk;
            sum += term;
            if (degree < 0 && std::abs(term) < kTermTolerance) return sum;
        }
        g = advance(g, k);
        xk *= x;
    }
    if (degree >= 0) return sum;
    throw NumericalError("series oracle for " + y.name() + " did not converge within 1000 terms");
}

} // namespace fracdiff
