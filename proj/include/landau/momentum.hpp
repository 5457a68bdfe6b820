#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "landau/errors.hpp"
#include "landau/model.hpp"
#include "landau/parallel.hpp"
#include "landau/position.hpp"
#include "landau/quadrature.hpp"

namespace landau {

// Pre-renormalization Parseval defect that aborts the transform.
inline constexpr double parseval_abort_tol = 1e-4;

// Exponent sign of the transform kernel. The product convention is
// positive, exp(+ikx); the flipped kernel exists so tests can prove the
// convention is observable (it mirrors the momentum density).
enum class FourierSign { positive, negative };

// Momentum grid sized like auto_grid but in the reciprocal scale: the tilt
// drifts the density to k = -theta/2, and widths grow with sqrt(m*omega).
inline GridSpec auto_kgrid(const ModelParams& p, int n) {
    p.validate();
    check_quantum_number(n);
    GridSpec grid;
    grid.center = -0.5 * p.theta;
    grid.half_width = (12.0 + 4.0 * n) * p.inv_length_scale() + std::abs(p.theta);
    grid.points = 2049;
    return grid;
}

// Continuous Fourier transform of a normalized position-space state onto
// kgrid: phi(k) = (1/sqrt(2*pi)) * integral psi(x) exp(sign*ikx) dx per node,
// by Simpson quadrature. k nodes are independent and computed in parallel;
// each node's inner sum runs in fixed order, so the result is deterministic
// for any worker count. The result is renormalized in k so residual
// quadrature error cannot leak into downstream entropies; the
// pre-renormalization Parseval defect is reported through parseval_defect
// and must be small for the transform to be trusted.
inline SampledWavefunction fourier_transform(const SampledWavefunction& wf, GridSpec kgrid,
                                             FourierSign sign = FourierSign::positive,
                                             double* parseval_defect = nullptr) {
    if (wf.representation != Representation::position)
        throw std::invalid_argument("fourier_transform: input must be in position representation");
    kgrid.validate();
    const GridSpec& xgrid = wf.grid;
    const double dx = xgrid.spacing();
    const double sigma = sign == FourierSign::positive ? 1.0 : -1.0;

    // Fold the Simpson weights into the samples once.
    const std::vector<double> weights = simpson_weights(xgrid);
    std::vector<std::complex<double>> folded(wf.samples.size());
    for (std::size_t j = 0; j < wf.samples.size(); ++j) folded[j] = weights[j] * wf.samples[j];

    SampledWavefunction out;
    out.representation = Representation::momentum;
    out.grid = kgrid;
    out.params = wf.params;
    out.n = wf.n;
    out.samples.resize(static_cast<std::size_t>(kgrid.points));

    const double x0 = xgrid.node(0);
    const int xpoints = xgrid.points;
    const double inv_root_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    // The running phase is resynchronized to an exact value periodically so
    // recurrence rounding cannot accumulate across long grids.
    constexpr int resync_stride = 256;

    parallel_for(kgrid.points, [&](int i) {
        const double k = kgrid.node(i);
        const std::complex<double> step = std::polar(1.0, sigma * k * dx);
        std::complex<double> phase = std::polar(1.0, sigma * k * x0);
        std::complex<double> sum{0.0, 0.0};
        for (int j = 0; j < xpoints; ++j) {
            if (j % resync_stride == 0)
                phase = std::polar(1.0, sigma * k * (x0 + j * dx));
            sum += folded[static_cast<std::size_t>(j)] * phase;
            phase *= step;
        }
        out.samples[static_cast<std::size_t>(i)] = sum * inv_root_2pi;
    });

    const std::vector<double> rho = out.probability_density();
    const double parseval = integrate(rho, kgrid.spacing());
    const double defect = std::abs(parseval - 1.0);
    if (parseval_defect) *parseval_defect = defect;
    if (defect > parseval_abort_tol)
        throw ParsevalViolation("fourier_transform: pre-renormalization norm defect " +
                                std::to_string(defect) + " exceeds " +
                                std::to_string(parseval_abort_tol));
    const double scale = 1.0 / std::sqrt(parseval);
    for (auto& value : out.samples) value *= scale;
    out.norm_constant = scale;
    return out;
}

// Closed-form momentum eigenfunctions for the two lowest levels, up to a
// free normalization constant. Used only as shape oracles against
// fourier_transform; higher levels come exclusively from the numeric
// transform.
inline std::complex<double> closed_form_momentum(const ModelParams& p, int n, double k) {
    p.validate();
    if (n != 0 && n != 1)
        throw std::invalid_argument("closed_form_momentum: only n = 0 and n = 1 are supported");
    using namespace std::complex_literals;
    const double m = p.m, hb = p.hbar, w = p.omega, th = p.theta, py = p.p_y;
    const std::complex<double> exponent =
        (8.0 * 1i * k * m * w * py - 4.0 * k * m * w * th * hb - 4.0 * k * k * m * w * hb -
         4.0 * 1i * k * m * th * w * hb + m * th * th * w * hb) /
        (8.0 * m * m * w * w);
    const std::complex<double> envelope = std::exp(exponent);
    const std::complex<double> kk = 2.0 * k + 1i * th;
    const double root_pi = std::sqrt(std::numbers::pi);
    if (n == 0) return (1i * kk * hb / (m * w * root_pi)) * envelope;
    const std::complex<double> prefactor = (-2.0 * 1i * k + th) * hb;
    const std::complex<double> bracket = 6.0 * m * w - kk * kk * hb;
    return (prefactor * bracket / (6.0 * m * w * w * root_pi)) * envelope;
}

} // namespace landau
