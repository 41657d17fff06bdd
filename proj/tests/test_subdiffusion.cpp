#include "fracdiff/errors.hpp"
#include "fracdiff/special_functions.hpp"
#include "fracdiff/subdiffusion.hpp"
#include "fracdiff/tridiagonal.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

using namespace fracdiff;

namespace {

// Dense Gaussian elimination with partial pivoting.
std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t m = b.size();
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < m; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        for (std::size_t r = c + 1; r < m; ++r) {
            const double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < m; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<double> x(m);
    for (std::size_t i = m; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < m; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return x;
}

SubdiffusionProblem steady_problem(double alpha, int N, int M) {
    SubdiffusionProblem p;
    p.alpha = alpha;
    p.u0 = [](double x) { return x * (1.0 - x); };
    p.uL = [](double) { return 0.0; };
    p.uR = [](double) { return 0.0; };
    p.forcing = [](double, double) { return 2.0; };
    p.N = N;
    p.M = M;
    return p;
}

double final_error(const FieldHistory& f) {
    double e = 0.0;
    for (int n = 0; n <= f.N(); ++n) e = std::max(e, std::abs(f.at(f.M(), n) - subdiffusion_exact_reference(n * f.h(), 1.0)));
    return e;
}

} // namespace

TEST_CASE("thomas on small systems") {
    TridiagonalSystem id{{0.0, 0.0}, {1.0, 1.0, 1.0}, {0.0, 0.0}, {3.0, -1.0, 2.5}};
    CHECK(thomas_solve(id) == std::vector<double>{3.0, -1.0, 2.5});

    TridiagonalSystem s{{-1.0, -1.0}, {2.0, 2.0, 2.0}, {-1.0, -1.0}, {1.0, 0.0, 1.0}};
    const auto x = thomas_solve(s);
    for (double v : x) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));

    TridiagonalSystem one{{}, {4.0}, {}, {2.0}};
    CHECK(thomas_solve(one)[0] == 0.5);
}

TEST_CASE("thomas against dense elimination") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 50;
        TridiagonalSystem s;
        s.lower.resize(m - 1);
        s.upper.resize(m - 1);
        s.diag.resize(m);
        s.rhs.resize(m);
        for (auto& v : s.lower) v = u(rng);
        for (auto& v : s.upper) v = u(rng);
        for (auto& v : s.rhs) v = u(rng);
        std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
        for (int i = 0; i < m; ++i) {
            const double off = (i > 0 ? std::abs(s.lower[i - 1]) : 0.0) + (i + 1 < m ? std::abs(s.upper[i]) : 0.0);
            s.diag[i] = (u(rng) < 0 ? -1.0 : 1.0) * (off + 0.1 + std::abs(u(rng)));
            a[i][i] = s.diag[i];
            if (i > 0) a[i][i - 1] = s.lower[i - 1];
            if (i + 1 < m) a[i][i + 1] = s.upper[i];
        }
        REQUIRE(s.strictly_diagonally_dominant());
        const auto x = thomas_solve(s);
        const auto ref = dense_solve(a, s.rhs);
        double residual = 0.0;
        double scale = 0.0;
        for (int i = 0; i < m; ++i) {
            CHECK(std::abs(x[i] - ref[i]) <= 1e-10);
            double ax = s.diag[i] * x[i];
            if (i > 0) ax += s.lower[i - 1] * x[i - 1];
            if (i + 1 < m) ax += s.upper[i] * x[i + 1];
            residual = std::max(residual, std::abs(ax - s.rhs[i]));
            scale = std::max(scale, std::abs(s.rhs[i]));
        }
        CHECK(residual <= 1e-11 * scale);
    }
}

TEST_CASE("thomas failures") {
    TridiagonalSystem singular{{1.0}, {1.0, 1.0}, {1.0}, {1.0, 2.0}};
    CHECK_FALSE(singular.strictly_diagonally_dominant());
    CHECK_THROWS_AS(thomas_solve(singular), NumericalError);
    TridiagonalSystem zero_pivot{{1.0}, {0.0, 1.0}, {1.0}, {1.0, 2.0}};
    CHECK_THROWS_AS(thomas_solve(zero_pivot), NumericalError);
    TridiagonalSystem ragged{{1.0, 1.0}, {3.0, 3.0}, {1.0}, {1.0, 2.0}};
    CHECK_THROWS_AS(thomas_solve(ragged), DomainError);
}

TEST_CASE("assembled systems are dominant") {
    for (double alpha : {0.05, 0.5, 0.95}) {
        for (double w0 : {1.0, 1.0 - zeta(alpha - 1.0)}) {
            const double eta = 1e3;
            const int m = 10;
            TridiagonalSystem s{std::vector<double>(m - 1, -eta), std::vector<double>(m, w0 + 2.0 * eta),
                                std::vector<double>(m - 1, -eta), std::vector<double>(m, 1.0)};
            CHECK(s.strictly_diagonally_dominant());
        }
    }
}

TEST_CASE("zero problem") {
    SubdiffusionProblem p;
    p.alpha = 0.5;
    p.u0 = [](double) { return 0.0; };
    p.uL = p.u0;
    p.uR = p.u0;
    p.forcing = [](double, double) { return 0.0; };
    p.N = 8;
    p.M = 5;
    for (double v : first_layer_implicit(p)) CHECK(v == 0.0);
    const auto f = solve_subdiffusion(p, SchemeKind::L1Z);
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 8; ++n) CHECK(f.at(m, n) == 0.0);
}

TEST_CASE("implicit first layer") {
    const auto p = subdiffusion_reference_problem(0.6, 20, 20);
    const auto u1 = first_layer_implicit(p);
    REQUIRE(u1.size() == 21);
    double e = 0.0;
    for (int n = 0; n <= 20; ++n) e = std::max(e, std::abs(u1[n] - subdiffusion_exact_reference(n * p.h(), p.tau())));
    CHECK(e < 5e-3);
    CHECK(u1.front() == 0.0);
    CHECK(u1.back() == 0.0);
}

TEST_CASE("implicit first layer with vanishing eta") {
    auto p = subdiffusion_reference_problem(0.9, 4, 2);
    p.T = 1e-10;
    REQUIRE(p.eta() < 1e-7);
    const auto u1 = first_layer_implicit(p);
    const double g = std::tgamma(1.1) * std::pow(p.tau(), 0.9);
    for (int n = 1; n < 4; ++n) {
        const double x = n * p.h();
        CHECK(std::abs(u1[n] - (p.u0(x) + g * p.forcing(x, p.tau()))) <= 1e-8);
    }
}

TEST_CASE("taylor first layer") {
    const auto p = subdiffusion_reference_problem(0.6, 20, 20);
    const auto u1 = first_layer_taylor(p, subdiffusion_reference_ut0);
    for (int n = 0; n <= 20; ++n) {
        const double x = n * p.h();
        CHECK(u1[n] == doctest::Approx(x * x * (1.0 - x) * (1.0 - 4.0 * p.tau())).epsilon(1e-14));
    }
    const auto still = first_layer_taylor(p, [](double) { return 0.0; });
    for (int n = 0; n <= 20; ++n) CHECK(still[n] == p.u0(n * p.h()));
}

TEST_CASE("steady quadratic is reproduced") {
    for (auto kind : {SchemeKind::L1, SchemeKind::L1Z}) {
        for (double alpha : {0.2, 0.7}) {
            const auto p = steady_problem(alpha, 10, 12);
            for (const auto& first : {FirstLayer::implicit(), FirstLayer::taylor([](double) { return 0.0; })}) {
                const auto f = solve_subdiffusion(p, kind, first);
                for (int m = 0; m <= 12; ++m)
                    for (int n = 0; n <= 10; ++n) CHECK(std::abs(f.at(m, n) - p.u0(n * p.h())) <= 1e-10);
            }
        }
    }
}

TEST_CASE("benchmark errors at h = 0.05") {
    CHECK(final_error(solve_subdiffusion(subdiffusion_reference_problem(0.6, 20, 20), SchemeKind::L1)) ==
          doctest::Approx(0.000517935196).epsilon(1e-8));
    CHECK(final_error(solve_subdiffusion(subdiffusion_reference_problem(0.6, 20, 20), SchemeKind::L1Z)) ==
          doctest::Approx(1.17024894e-05).epsilon(1e-7));
    CHECK(final_error(solve_subdiffusion(subdiffusion_reference_problem(0.4, 20, 40), SchemeKind::L1)) ==
          doctest::Approx(6.17238335e-05).epsilon(1e-8));
    const auto taylor = FirstLayer::taylor(subdiffusion_reference_ut0);
    CHECK(final_error(solve_subdiffusion(subdiffusion_reference_problem(0.6, 20, 20), SchemeKind::L1Z, taylor)) ==
          doctest::Approx(1.7304209e-05).epsilon(1e-7));
}

TEST_CASE("field layout") {
    const auto f = solve_subdiffusion(subdiffusion_reference_problem(0.5, 4, 3), SchemeKind::L1Z);
    CHECK(f.N() == 4);
    CHECK(f.M() == 3);
    CHECK(f.layer(0).size() == 5);
    for (int n = 0; n <= 4; ++n) CHECK(f.at(0, n) == subdiffusion_exact_reference(n * 0.25, 0.0));
    for (int m = 0; m <= 3; ++m) {
        CHECK(f.at(m, 0) == 0.0);
        CHECK(f.at(m, 4) == 0.0);
    }
    CHECK(f.eta() == doctest::Approx(std::tgamma(1.5) * std::pow(1.0 / 3.0, 0.5) * 16.0).epsilon(1e-14));
}

TEST_CASE("field csv") {
    const auto f = solve_subdiffusion(subdiffusion_reference_problem(0.5, 4, 3), SchemeKind::L1);
    std::ostringstream out;
    const std::vector<int> layers{0, 3};
    write_field_csv(out, f, layers);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "x_0,x_1,x_2,x_3,x_4");
    std::getline(in, line);
    CHECK(line == "0,0.046875,0.125,0.140625,0");
    std::getline(in, line);
    CHECK(std::count(line.begin(), line.end(), ',') == 4);
    CHECK(std::stod(line.substr(line.find(',') + 1)) == f.at(3, 1));
    CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("problem validation") {
    auto p = subdiffusion_reference_problem(0.5, 2, 4);
    CHECK_THROWS_AS(solve_subdiffusion(p, SchemeKind::L1), DomainError);
    p = subdiffusion_reference_problem(0.5, 4, 1);
    CHECK_THROWS_AS(solve_subdiffusion(p, SchemeKind::L1), DomainError);
    p = subdiffusion_reference_problem(0.5, 4, 4);
    p.uL = [](double) { return 1.0; };
    CHECK_THROWS_AS(solve_subdiffusion(p, SchemeKind::L1), DomainError);
    p = subdiffusion_reference_problem(0.5, 4, 4);
    CHECK_THROWS_AS(solve_subdiffusion(p, SchemeKind::L1, FirstLayer{FirstLayer::Kind::Taylor, {}}), DomainError);
}
