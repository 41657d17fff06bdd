#include "fracdiff/cli.hpp"
#include "fracdiff/subdiffusion.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using namespace fracdiff;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "fracdiff");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) result.push_back(line);
    return result;
}

std::vector<double> split_doubles(const std::string& line) {
    std::vector<double> values;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) values.push_back(std::stod(cell));
    return values;
}

} // namespace

TEST_CASE("coeffs csv sums to zero") {
    const auto r = run({"coeffs", "--scheme", "l1z", "--alpha", "0.5", "--n", "8", "--output", "csv"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 10);
    CHECK(ls[0] == "k,weight");
    double sum = 0.0;
    for (std::size_t i = 1; i < ls.size(); ++i) sum += split_doubles(ls[i])[1];
    CHECK(std::abs(sum) <= 1e-12);
    CHECK(split_doubles(ls[1])[1] == doctest::Approx(1.2078862249773545).epsilon(1e-13));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"coeffs", "--alpha", "1.5"}).code == 2);
    CHECK(run({"coeffs", "--alpha", "0.5", "--n", "1", "--scheme", "l1z"}).code == 2);
    CHECK(run({"caputo", "--step", "0.3"}).code == 2);
    CHECK(run({"tables", "--id", "table9"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    const auto r = run({"relaxation", "--benchmark", "other"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
}

TEST_CASE("oracle domain") {
    CHECK(run({"integral", "--fn", "poly:1", "--alpha", "0.5", "--x", "1", "--step", "0.25"}).code == 0);
    CHECK(run({"caputo", "--fn", "log1p", "--x", "1.2", "--step", "0.1"}).code == 2);
    CHECK(run({"caputo", "--fn", "cos", "--x", "1.6", "--step", "0.1"}).code == 2);
}

TEST_CASE("help exits with 0") {
    const auto r = run({"subdiffusion", "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Spatial intervals N") != std::string::npos);
    for (const char* cmd : {"coeffs", "caputo", "integral", "relaxation", "tables"}) CHECK(run({cmd, "--help"}).code == 0);
}

TEST_CASE("caputo and integral") {
    const auto r = run({"caputo", "--fn", "cos", "--alpha", "0.6", "--scheme", "l1", "--step", "0.05", "--output", "csv"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    CHECK(ls[0] == "x,h,approx,exact,error");
    CHECK(split_doubles(ls[1])[4] == doctest::Approx(0.0023483975).epsilon(1e-7));
    const auto i = run({"integral", "--fn", "log1p", "--alpha", "0.4", "--step", "0.05", "--output", "csv"});
    REQUIRE(i.code == 0);
    CHECK(split_doubles(lines(i.out)[1]).size() == 7);
}

TEST_CASE("relaxation") {
    const auto r = run({"relaxation", "--alpha", "0.8", "--n", "20", "--scheme", "l1", "--output", "csv"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    CHECK(ls.size() == 22);
    const auto decay = run({"relaxation", "--benchmark", "decay", "--B", "2", "--y0", "1", "--T", "2", "--n", "40"});
    CHECK(decay.code == 0);
}

TEST_CASE("subdiffusion final layer") {
    const auto r = run({"subdiffusion", "--alpha", "0.6", "--n", "20", "--m", "20", "--scheme", "l1z", "--benchmark",
                        "reference", "--output", "csv"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    const auto u = split_doubles(ls[1]);
    REQUIRE(u.size() == 21);
    double e = 0.0;
    for (int n = 0; n <= 20; ++n) e = std::max(e, std::abs(u[n] - subdiffusion_exact_reference(n / 20.0, 1.0)));
    CHECK(e < 2e-5);

    const auto all = run({"subdiffusion", "--n", "5", "--m", "4", "--layers", "all", "--output", "csv"});
    CHECK(lines(all.out).size() == 6);
    CHECK(run({"subdiffusion", "--n", "5", "--m", "4", "--first-layer", "taylor"}).code == 0);
}

TEST_CASE("repeat runs are byte identical") {
    const std::vector<std::string> args{"tables", "--id", "table3-log", "--output", "csv"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("output file") {
    const std::string path = "fracdiff_cli_test_output.csv";
    const auto r = run({"coeffs", "--alpha", "0.3", "--n", "4", "--output", "csv", "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.rfind("k,weight\n", 0) == 0);
    std::remove(path.c_str());
}
