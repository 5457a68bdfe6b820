#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "landau/errors.hpp"
#include "landau/model.hpp"
#include "landau/quadrature.hpp"

namespace landau {

enum class Representation { position, momentum };

// Normalization defect allowed after scaling.
inline constexpr double norm_tol = 1e-8;
// Required edge decay of |psi|^2 relative to its peak; guards truncation bias.
inline constexpr double edge_decay_tol = 1e-12;
// Relative tolerance for the norm-integral doubling loop.
inline constexpr double norm_rel_tol = 1e-9;

// A uniform grid with complex samples in one representation, normalized so
// the Simpson integral of |samples|^2 is 1. norm_constant is the scale that
// was applied to the raw samples. Immutable after construction.
struct SampledWavefunction {
    Representation representation = Representation::position;
    GridSpec grid;
    std::vector<std::complex<double>> samples;
    double norm_constant = 1.0;
    ModelParams params;
    int n = 0;

    std::vector<double> probability_density() const {
        std::vector<double> rho(samples.size());
        for (std::size_t j = 0; j < samples.size(); ++j) rho[j] = std::norm(samples[j]);
        return rho;
    }
};

// Unnormalized eigenfunction at x: xi * exp(-xi^2/2) * exp(tilt*xi) *
// kummer_poly(n, xi^2), with the unimodular time and transverse phases
// dropped. The two exponentials are combined before exponentiating so the
// only overflow surface is the total exponent.
inline std::complex<double> eval_unnormalized(const ModelParams& p, int n, double x) {
    p.validate();
    check_quantum_number(n);
    const std::complex<double> xi = xi_of_x(p, x);
    const std::complex<double> xi2 = xi * xi;
    const std::complex<double> exponent = -0.5 * xi2 + p.tilt() * xi;
    // Underflow side of the Gaussian envelope: exact zero.
    if (exponent.real() < -745.0) return {0.0, 0.0};
    // Overflow is unreachable on physically sized grids; refuse to wrap.
    if (exponent.real() > 709.0)
        throw std::range_error("eval_unnormalized: exponent overflow at x=" + std::to_string(x));
    return xi * std::exp(exponent) * kummer_poly(n, xi2);
}

// Grid sized so every supported state decays below edge_decay_tol:
// centered on the density, widened linearly with n and by the tilt shift.
inline GridSpec auto_grid(const ModelParams& p, int n) {
    p.validate();
    check_quantum_number(n);
    GridSpec grid;
    grid.center = p.center_x();
    grid.half_width = (12.0 + 4.0 * n) * p.length_scale() +
                      std::abs(p.theta) * p.hbar / (p.m * p.omega);
    grid.points = 2049;
    return grid;
}

namespace detail {

// Samples the state on exactly the given grid and scales it so the Simpson
// integral of |psi|^2 is 1. Throws TruncationBias if either edge fails the
// decay requirement. Returns the raw norm integral through raw_norm.
inline SampledWavefunction normalize_on_grid(const ModelParams& p, int n, const GridSpec& grid,
                                             double* raw_norm = nullptr) {
    grid.validate();
    SampledWavefunction wf;
    wf.representation = Representation::position;
    wf.grid = grid;
    wf.params = p;
    wf.n = n;
    wf.samples.resize(static_cast<std::size_t>(grid.points));
    std::vector<double> rho(static_cast<std::size_t>(grid.points));
    double peak = 0.0;
    for (int j = 0; j < grid.points; ++j) {
        const std::complex<double> value = eval_unnormalized(p, n, grid.node(j));
        wf.samples[static_cast<std::size_t>(j)] = value;
        const double density = std::norm(value);
        rho[static_cast<std::size_t>(j)] = density;
        if (density > peak) peak = density;
    }
    if (peak <= 0.0) throw TruncationBias("normalize: state vanishes on the whole grid");
    if (rho.front() > edge_decay_tol * peak || rho.back() > edge_decay_tol * peak)
        throw TruncationBias("normalize: |psi|^2 does not decay below " +
                             std::to_string(edge_decay_tol) + " of peak at the grid edge");
    const double norm_integral = integrate(rho, grid.spacing());
    if (raw_norm) *raw_norm = norm_integral;
    const double scale = 1.0 / std::sqrt(norm_integral);
    for (auto& value : wf.samples) value *= scale;
    wf.norm_constant = scale;
    return wf;
}

} // namespace detail

// Normalizes the state, doubling the grid until the norm integral is stable
// to norm_rel_tol, then scaling on the converged grid. Refuses to return a
// non-converged normalization.
inline SampledWavefunction normalize(const ModelParams& p, int n, GridSpec grid) {
    p.validate();
    check_quantum_number(n);
    grid.validate();
    double previous = 0.0;
    detail::normalize_on_grid(p, n, grid, &previous);
    while (true) {
        if (2 * grid.points - 1 > grid_points_cap)
            throw NonConvergence("normalize: norm integral did not stabilize within the point cap");
        grid = grid.doubled();
        double current = 0.0;
        SampledWavefunction wf = detail::normalize_on_grid(p, n, grid, &current);
        if (std::abs(current - previous) <= norm_rel_tol * std::max(1.0, std::abs(current)))
            return wf;
        previous = current;
    }
}

// Pointwise -rho*ln(rho) with the convention 0*ln(0) = 0; finite everywhere.
inline std::vector<double> entropic_density(std::span<const double> rho) {
    std::vector<double> result(rho.size());
    for (std::size_t j = 0; j < rho.size(); ++j)
        result[j] = rho[j] > 0.0 ? -rho[j] * std::log(rho[j]) : 0.0;
    return result;
}

inline std::vector<double> entropic_density_x(const SampledWavefunction& wf) {
    if (wf.representation != Representation::position)
        throw std::invalid_argument("entropic_density_x: wavefunction is not in position representation");
    const std::vector<double> rho = wf.probability_density();
    return entropic_density(rho);
}

} // namespace landau
