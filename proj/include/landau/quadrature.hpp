#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "landau/errors.hpp"

namespace landau {

// Hard cap on grid refinement: 2^20 + 1 points.
inline constexpr int grid_points_cap = (1 << 20) + 1;

// Uniform symmetric grid. Node j is center - half_width + j*spacing;
// a point count must be odd so composite Simpson applies.
struct GridSpec {
    double center = 0.0;
    double half_width = 1.0;
    int points = 2049;

    double spacing() const { return 2.0 * half_width / (points - 1); }
    double node(int j) const { return center - half_width + j * spacing(); }

    // Doubled resolution preserving oddness: p -> 2p - 1.
    GridSpec doubled() const { return {center, half_width, 2 * points - 1}; }

    void validate() const {
        if (!(half_width > 0.0)) throw std::invalid_argument("GridSpec: half_width must be > 0");
        if (points < 3) throw std::invalid_argument("GridSpec: points must be >= 3");
        if (points % 2 == 0) throw std::invalid_argument("GridSpec: points must be odd");
        if (!std::isfinite(center)) throw std::invalid_argument("GridSpec: center must be finite");
    }
};

struct ConvergenceReport {
    double final_value = 0.0;
    int iterations = 0;
    double last_delta = std::numeric_limits<double>::infinity();
    bool converged = false;
};

// Composite Simpson on a uniform grid; exact for cubics. The summation
// order is fixed (interior pass, then endpoints), so identical inputs give
// bitwise-identical results.
inline double integrate(std::span<const double> samples, double spacing) {
    const std::size_t count = samples.size();
    if (count < 3 || count % 2 == 0)
        throw std::invalid_argument("integrate: sample count must be odd and >= 3");
    if (!(spacing > 0.0)) throw std::invalid_argument("integrate: spacing must be > 0");
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t j = 1; j + 1 < count; ++j) {
        const double f = samples[j];
        if (!std::isfinite(f)) throw std::invalid_argument("integrate: non-finite sample");
        if (j % 2 == 1)
            odd += f;
        else
            even += f;
    }
    if (!std::isfinite(samples[0]) || !std::isfinite(samples[count - 1]))
        throw std::invalid_argument("integrate: non-finite sample");
    return (samples[0] + samples[count - 1] + 4.0 * odd + 2.0 * even) * spacing / 3.0;
}

// Simpson weights (including the spacing/3 factor) in node order.
inline std::vector<double> simpson_weights(const GridSpec& grid) {
    grid.validate();
    std::vector<double> w(static_cast<std::size_t>(grid.points), 2.0);
    for (int j = 1; j < grid.points - 1; j += 2) w[static_cast<std::size_t>(j)] = 4.0;
    w.front() = 1.0;
    w.back() = 1.0;
    const double scale = grid.spacing() / 3.0;
    for (double& v : w) v *= scale;
    return w;
}

// Integrates f by doubling the grid until successive Simpson estimates
// differ by <= abs_tol or the point cap is hit. Non-convergence is reported,
// never silently accepted; the caller decides whether it is fatal.
inline ConvergenceReport integrate_to_tolerance(const std::function<double(double)>& f,
                                                GridSpec grid, double abs_tol) {
    grid.validate();
    if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate_to_tolerance: abs_tol must be > 0");
    auto estimate = [&f](const GridSpec& g) {
        std::vector<double> samples(static_cast<std::size_t>(g.points));
        for (int j = 0; j < g.points; ++j) samples[static_cast<std::size_t>(j)] = f(g.node(j));
        return integrate(samples, g.spacing());
    };
    ConvergenceReport report;
    double previous = estimate(grid);
    while (true) {
        if (2 * grid.points - 1 > grid_points_cap) {
            report.final_value = previous;
            report.converged = false;
            return report;
        }
        grid = grid.doubled();
        const double current = estimate(grid);
        ++report.iterations;
        report.last_delta = std::abs(current - previous);
        report.final_value = current;
        previous = current;
        if (report.last_delta <= abs_tol) {
            report.converged = true;
            return report;
        }
    }
}

} // namespace landau
