// Shannon entropies of the position/momentum densities and the uncertainty
// bound they must satisfy.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "landau/entropy.hpp"

using Catch::Matchers::WithinAbs;
using namespace landau;

TEST_CASE("entropic uncertainty bound constant") {
    REQUIRE_THAT(bbm_bound(), WithinAbs(2.1447298858494002, 1e-15));
}

TEST_CASE("shannon_entropy on analytic densities") {
    SECTION("uniform density on a length-e interval has entropy 1") {
        const double length = std::numbers::e;
        GridSpec grid{0.0, 0.5 * length, 257};
        const std::vector<double> rho(257, 1.0 / length);
        REQUIRE_THAT(shannon_entropy(rho, grid.spacing()), WithinAbs(1.0, 1e-13));
    }
    SECTION("negative densities are rejected") {
        const std::vector<double> rho{0.5, -0.1, 0.5};
        REQUIRE_THROWS_AS(shannon_entropy(rho, 1.0), std::invalid_argument);
    }
    SECTION("unnormalized densities are rejected") {
        GridSpec grid{0.0, 0.5, 257};
        const std::vector<double> rho(257, 1.5);
        REQUIRE_THROWS_AS(shannon_entropy(rho, grid.spacing()), UnnormalizedDensity);
    }
}

TEST_CASE("Hermitian-limit ground state entropies") {
    ModelParams p;
    p.theta = 0.0;
    p.p_y = 0.0;
    const EntropyReport report = entropy_report(p, 0);
    // Closed-form value for the density (2/sqrt(pi)) x^2 exp(-x^2):
    // ln(pi)/2 + ln(2) + gamma - 1/2.
    REQUIRE_THAT(report.S_x, WithinAbs(1.3427277883861783, 5e-8));
    // At unit frequency the momentum density is the mirror image of the
    // position density, so the two entropies coincide.
    REQUIRE_THAT(report.S_k, WithinAbs(report.S_x, 2e-7));
    REQUIRE(report.margin > 0.0);
    REQUIRE(report.x_convergence.converged);
    REQUIRE(report.k_convergence.converged);
    REQUIRE(report.parseval_defect <= 1e-8);
}

TEST_CASE("converged entropies match the embedded reference pipeline values") {
    ModelParams p;
    struct Golden {
        int n;
        double omega, S_x, S_k;
    };
    // Independently converged to ~1e-9; the doubling tolerance dominates.
    const Golden cell = GENERATE(Golden{0, 10.0, 0.1776465425, 2.4802316355},
                                 Golden{0, 100.0, -0.9604082966, 3.6447618894},
                                 Golden{3, 1000.0, -1.5720340178, 5.3357212612});
    p.omega = cell.omega;
    const EntropyReport report = entropy_report(p, cell.n);
    REQUIRE_THAT(report.S_x, WithinAbs(cell.S_x, 1e-6));
    REQUIRE_THAT(report.S_k, WithinAbs(cell.S_k, 1e-6));
    REQUIRE_THAT(report.sum, WithinAbs(cell.S_x + cell.S_k, 2e-6));
    REQUIRE_THAT(report.margin, WithinAbs(report.sum - bbm_bound(), 1e-15));
}

TEST_CASE("momentum entropy exceeds position entropy by ln(omega) at unit scales") {
    // Reflection invariance of the entropy plus the reciprocal scaling of
    // the transform pin the difference to ln(m*omega/hbar) exactly.
    ModelParams p;
    p.omega = 10.0;
    const EntropyReport a = entropy_report(p, 1);
    REQUIRE_THAT(a.S_k - a.S_x, WithinAbs(std::log(10.0), 1e-6));
    p.omega = 100.0;
    const EntropyReport b = entropy_report(p, 2);
    REQUIRE_THAT(b.S_k - b.S_x, WithinAbs(std::log(100.0), 1e-6));
}

TEST_CASE("entropies are independent of p_y") {
    ModelParams p;
    p.omega = 10.0;
    const EntropyReport base = entropy_report(p, 0);
    p.p_y = 5.0;
    const EntropyReport shifted = entropy_report(p, 0);
    REQUIRE_THAT(shifted.S_x, WithinAbs(base.S_x, 1e-8));
    REQUIRE_THAT(shifted.S_k, WithinAbs(base.S_k, 1e-8));
}

TEST_CASE("field-strength trends for the ground state") {
    ModelParams p;
    std::vector<EntropyReport> reports;
    for (const double omega : {10.0, 100.0, 1000.0}) {
        p.omega = omega;
        reports.push_back(entropy_report(p, 0));
    }
    for (std::size_t j = 1; j < reports.size(); ++j) {
        REQUIRE(reports[j].S_x < reports[j - 1].S_x); // localization in x
        REQUIRE(reports[j].S_k > reports[j - 1].S_k); // spreading in k
        REQUIRE(reports[j].margin > 0.0);
    }
}

TEST_CASE("table sweep is row-major and carries the cell parameters") {
    ModelParams p;
    const int ns[] = {0, 1};
    const double omegas[] = {10.0, 100.0};
    const std::vector<EntropyReport> reports = table1(p, ns, omegas);
    REQUIRE(reports.size() == 4);
    REQUIRE(reports[0].n == 0);
    REQUIRE(reports[0].omega == 10.0);
    REQUIRE(reports[1].n == 0);
    REQUIRE(reports[1].omega == 100.0);
    REQUIRE(reports[3].n == 1);
    REQUIRE(reports[3].omega == 100.0);
    // Excited states are less certain in both spaces at fixed omega.
    REQUIRE(reports[2].S_x > reports[0].S_x);
    REQUIRE(reports[2].S_k > reports[0].S_k);
}

TEST_CASE("doubling that cannot reach tolerance reports non-convergence") {
    ModelParams p;
    EntropyOptions options;
    options.entropy_abs_tol = 1e-16;
    options.max_points = 4097;
    REQUIRE_THROWS_AS(entropy_report(p, 0, options), NonConvergence);
    options.entropy_abs_tol = -1.0;
    REQUIRE_THROWS_AS(entropy_report(p, 0, options), std::invalid_argument);
}

TEST_CASE("fixed-resolution pipeline pair agrees with the converged report") {
    ModelParams p;
    p.omega = 10.0;
    const EntropyReport report = entropy_report(p, 0);
    const detail::EntropyPair pair =
        detail::entropy_pair_on_grids(p, 0, report.x_grid, report.k_grid);
    REQUIRE_THAT(pair.S_x, WithinAbs(report.S_x, 1e-12));
    REQUIRE_THAT(pair.S_k, WithinAbs(report.S_k, 1e-12));
}
