// Spectrum, complex coordinate, and Kummer polynomial.

#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "landau/model.hpp"

using Catch::Approx;
using Catch::Matchers::WithinAbs;
using namespace landau;

TEST_CASE("energy spectrum values and limits") {
    ModelParams p; // m = hbar = k_B = p_y = theta = 1

    SECTION("offset plus oscillator ladder") {
        // m*alpha^2 = theta^2/(4m) = 0.25; E_0 = 1.5*10 + 0.25.
        p.omega = 10.0;
        REQUIRE_THAT(energy(p, 0), WithinAbs(15.25, 1e-12));
    }
    SECTION("Hermitian limit is the pure oscillator") {
        p.theta = 0.0;
        p.omega = 1.0;
        REQUIRE_THAT(energy(p, 0), WithinAbs(1.5, 1e-15));
    }
    SECTION("vanishing field leaves only the offset") {
        p.omega = 1e-12;
        for (int n : {0, 5, 64}) REQUIRE_THAT(energy(p, n), WithinAbs(0.25, 1e-9));
    }
    SECTION("levels are spaced by exactly 2*hbar*omega") {
        p.omega = 7.25;
        p.hbar = 0.5;
        for (int n = 0; n < 64; ++n)
            REQUIRE(energy(p, n + 1) - energy(p, n) == Approx(2.0 * p.hbar * p.omega).margin(1e-12));
    }
    SECTION("energy ignores p_y bitwise") {
        p.omega = 3.0;
        const double reference = energy(p, 2);
        p.p_y = -123.456;
        REQUIRE(energy(p, 2) == reference);
    }
    SECTION("spectrum offset agrees with the derived alpha") {
        p.theta = 2.5;
        p.m = 1.75;
        REQUIRE(p.spectrum_offset() == Approx(p.m * p.alpha() * p.alpha()).margin(0.0));
        REQUIRE(p.spectrum_offset() ==
                Approx(p.theta * p.theta * p.hbar * p.hbar / (4.0 * p.m)).margin(1e-15));
    }
}

TEST_CASE("parameter validation") {
    ModelParams p;
    p.omega = 0.0;
    REQUIRE_THROWS_AS(p.validate(), std::invalid_argument);
    p.omega = 1.0;
    p.N = 0;
    REQUIRE_THROWS_AS(p.validate(), std::invalid_argument);
    p.N = 1;
    p.theta = 0.0; // Hermitian limit must be accepted
    REQUIRE_NOTHROW(p.validate());
    REQUIRE_THROWS_AS(energy(p, -1), std::invalid_argument);
    REQUIRE_THROWS_AS(energy(p, max_quantum_number + 1), std::invalid_argument);
}

TEST_CASE("complex coordinate xi_of_x") {
    ModelParams p;

    SECTION("identity scaling without shifts") {
        p.theta = 0.0;
        p.p_y = 0.0;
        const auto xi = xi_of_x(p, 2.0);
        REQUIRE_THAT(xi.real(), WithinAbs(2.0, 1e-15));
        REQUIRE_THAT(xi.imag(), WithinAbs(0.0, 1e-15));
    }
    SECTION("x cancels the real shift p_y/(m*omega)") {
        const auto xi = xi_of_x(p, 1.0);
        REQUIRE_THAT(xi.real(), WithinAbs(0.0, 1e-15));
        REQUIRE_THAT(xi.imag(), WithinAbs(-0.5, 1e-15));
    }
    SECTION("strong field: sqrt(100)*(0.01 - 0.01 - i/200) = -0.05i") {
        p.omega = 100.0;
        const auto xi = xi_of_x(p, 0.01);
        REQUIRE_THAT(xi.real(), WithinAbs(0.0, 1e-15));
        REQUIRE_THAT(xi.imag(), WithinAbs(-0.05, 1e-15));
    }
    SECTION("imaginary part is constant in x, real part strictly increasing") {
        p.omega = 17.0;
        const auto a = xi_of_x(p, -3.0);
        const auto b = xi_of_x(p, 0.25);
        const auto c = xi_of_x(p, 8.0);
        REQUIRE(a.imag() == b.imag());
        REQUIRE(b.imag() == c.imag());
        REQUIRE(a.real() < b.real());
        REQUIRE(b.real() < c.real());
    }
}

TEST_CASE("terminating Kummer polynomial") {
    using namespace std::complex_literals;

    SECTION("n = 0 is identically 1") {
        REQUIRE(kummer_poly(0, {123.0, -45.0}) == std::complex<double>{1.0, 0.0});
    }
    SECTION("n = 1: 1 - (2/3) z") {
        REQUIRE_THAT(kummer_poly(1, {2.0, 0.0}).real(), WithinAbs(-1.0 / 3.0, 1e-15));
    }
    SECTION("n = 2 at z = 1 + i: 1 - (4/3)z + (4/15)z^2 = -1/3 - 0.8i") {
        // z^2 = 2i, so the value is 1 - 4/3 - (4/3)i + (8/15)i.
        const auto value = kummer_poly(2, 1.0 + 1.0i);
        REQUIRE_THAT(value.real(), WithinAbs(-1.0 / 3.0, 1e-15));
        REQUIRE_THAT(value.imag(), WithinAbs(-0.8, 1e-15));
    }
    SECTION("value at 0 is 1 for every n") {
        for (int n = 0; n <= max_quantum_number; ++n)
            REQUIRE(kummer_poly(n, {0.0, 0.0}) == std::complex<double>{1.0, 0.0});
    }
    SECTION("real coefficients: conjugation commutes") {
        const std::complex<double> z{0.7, -1.9};
        for (int n : {1, 3, 7, 20}) {
            const auto direct = kummer_poly(n, std::conj(z));
            const auto swapped = std::conj(kummer_poly(n, z));
            REQUIRE_THAT(direct.real(), WithinAbs(swapped.real(), 1e-13));
            REQUIRE_THAT(direct.imag(), WithinAbs(swapped.imag(), 1e-13));
        }
    }
}
