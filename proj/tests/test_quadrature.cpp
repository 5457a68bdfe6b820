// Composite Simpson integration and grid-doubling convergence.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "landau/quadrature.hpp"

using Catch::Matchers::WithinAbs;
using namespace landau;

namespace {

std::vector<double> sample(const GridSpec& grid, double (*f)(double)) {
    std::vector<double> out(static_cast<std::size_t>(grid.points));
    for (int j = 0; j < grid.points; ++j) out[static_cast<std::size_t>(j)] = f(grid.node(j));
    return out;
}

} // namespace

TEST_CASE("grid geometry") {
    GridSpec grid{1.0, 2.0, 5};
    REQUIRE_THAT(grid.spacing(), WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(grid.node(0), WithinAbs(-1.0, 1e-15));
    REQUIRE_THAT(grid.node(4), WithinAbs(3.0, 1e-15));
    REQUIRE(grid.doubled().points == 9);
    REQUIRE_THROWS_AS((GridSpec{0.0, 1.0, 4}.validate()), std::invalid_argument);
    REQUIRE_THROWS_AS((GridSpec{0.0, -1.0, 5}.validate()), std::invalid_argument);
}

TEST_CASE("Simpson rule basics") {
    SECTION("constant integrand") {
        GridSpec grid{0.5, 0.5, 101};
        const auto samples = sample(grid, +[](double) { return 1.0; });
        REQUIRE_THAT(integrate(samples, grid.spacing()), WithinAbs(1.0, 1e-14));
    }
    SECTION("exact for cubics: integral of x^3 over [0,2] is 4") {
        GridSpec grid{1.0, 1.0, 5};
        const auto samples = sample(grid, +[](double x) { return x * x * x; });
        REQUIRE_THAT(integrate(samples, grid.spacing()), WithinAbs(4.0, 1e-14));
    }
    SECTION("rejects even sample counts and non-finite samples") {
        REQUIRE_THROWS_AS(integrate(std::vector<double>{1.0, 1.0, 1.0, 1.0}, 0.1),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(integrate(std::vector<double>{1.0, std::nan(""), 1.0}, 0.1),
                          std::invalid_argument);
    }
    SECTION("linearity to machine precision") {
        GridSpec grid{0.0, 3.0, 201};
        const auto f = sample(grid, +[](double x) { return std::exp(-x * x); });
        const auto g = sample(grid, +[](double x) { return std::cos(x); });
        std::vector<double> combo(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) combo[j] = 2.0 * f[j] - 3.0 * g[j];
        const double direct = integrate(combo, grid.spacing());
        const double split =
            2.0 * integrate(f, grid.spacing()) - 3.0 * integrate(g, grid.spacing());
        REQUIRE_THAT(direct, WithinAbs(split, 1e-13));
    }
    SECTION("deterministic: identical inputs, bitwise-identical output") {
        GridSpec grid{0.0, 8.0, 4097};
        const auto samples = sample(grid, +[](double x) { return std::exp(-x * x) * (1 + x * x); });
        const double a = integrate(samples, grid.spacing());
        const double b = integrate(samples, grid.spacing());
        REQUIRE(a == b);
    }
}

TEST_CASE("doubling to tolerance") {
    SECTION("zero integrand converges immediately") {
        const auto report =
            integrate_to_tolerance([](double) { return 0.0; }, GridSpec{0.0, 1.0, 5}, 1e-12);
        REQUIRE(report.converged);
        REQUIRE(report.final_value == 0.0);
        REQUIRE(report.iterations == 1);
    }
    SECTION("Gaussian integral identity") {
        const auto report = integrate_to_tolerance(
            [](double x) { return std::exp(-x * x); }, GridSpec{0.0, 8.0, 9}, 1e-10);
        REQUIRE(report.converged);
        REQUIRE(report.last_delta <= 1e-10);
        REQUIRE_THAT(report.final_value, WithinAbs(std::sqrt(std::numbers::pi), 1e-10));
    }
    SECTION("normalized Gaussian density over 10 sigma") {
        const auto report = integrate_to_tolerance(
            [](double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); },
            GridSpec{0.0, 10.0, 9}, 1e-10);
        REQUIRE(report.converged);
        REQUIRE_THAT(report.final_value, WithinAbs(1.0, 1e-10));
    }
    SECTION("support outside the grid converges to a biased value") {
        // The doubling loop can only see the window it was given: a Gaussian
        // truncated at one sigma converges, but below 1.
        const auto report = integrate_to_tolerance(
            [](double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); },
            GridSpec{0.0, 1.0, 9}, 1e-12);
        REQUIRE(report.converged);
        REQUIRE(report.final_value < 0.70);
        REQUIRE(report.final_value > 0.65);
    }
    SECTION("doubling estimates form a Cauchy sequence on smooth decaying integrands") {
        GridSpec grid{0.0, 8.0, 17};
        double previous = 0.0;
        std::vector<double> deltas;
        for (int level = 0; level < 5; ++level) {
            const auto samples = sample(grid, +[](double x) { return std::exp(-x * x) * x * x; });
            const double value = integrate(samples, grid.spacing());
            if (level > 0) deltas.push_back(std::abs(value - previous));
            previous = value;
            grid = grid.doubled();
        }
        for (std::size_t j = 1; j < deltas.size(); ++j) REQUIRE(deltas[j] <= deltas[j - 1]);
    }
}
