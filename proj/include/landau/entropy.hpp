#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "landau/errors.hpp"
#include "landau/model.hpp"
#include "landau/momentum.hpp"
#include "landau/position.hpp"
#include "landau/quadrature.hpp"

namespace landau {

// Entropic uncertainty lower bound for one dimension: 1 + ln(pi).
inline double bbm_bound() { return 1.0 + std::log(std::numbers::pi); }

// Normalization defect beyond which a density is rejected outright.
inline constexpr double density_norm_abort_tol = 1e-4;

struct EntropyOptions {
    double entropy_abs_tol = 1e-7; // doubling stops when the entropy moves less than this
    int initial_points = 2049;     // starting resolution of both grids
    int max_points = grid_points_cap;
};

struct EntropyReport {
    int n = 0;
    double omega = 0.0;
    double S_x = 0.0;
    double S_k = 0.0;
    double sum = 0.0;
    double bbm = 0.0;
    double margin = 0.0;
    ConvergenceReport x_convergence; // doubling history of S_x
    ConvergenceReport k_convergence; // doubling history of S_k
    double parseval_defect = 0.0;    // pre-renormalization, at the final grids
    GridSpec x_grid;                 // converged grids, for reproducibility checks
    GridSpec k_grid;
};

// Shannon entropy -integral rho*ln(rho) of a sampled density, with the
// convention 0*ln(0) = 0. The density must already be normalized; a norm
// defect beyond density_norm_abort_tol is a contract violation.
inline double shannon_entropy(std::span<const double> density, double spacing) {
    for (const double value : density)
        if (!(value >= 0.0))
            throw std::invalid_argument("shannon_entropy: density must be non-negative");
    const double norm = integrate(density, spacing);
    if (std::abs(norm - 1.0) > density_norm_abort_tol)
        throw UnnormalizedDensity("shannon_entropy: density integrates to " +
                                  std::to_string(norm) + ", expected 1");
    const std::vector<double> integrand = entropic_density(density);
    return integrate(integrand, spacing);
}

namespace detail {

// One fixed-resolution evaluation of the pipeline: normalize on xgrid,
// transform onto kgrid, return both entropies and the Parseval defect.
struct EntropyPair {
    double S_x = 0.0;
    double S_k = 0.0;
    double parseval_defect = 0.0;
};

inline EntropyPair entropy_pair_on_grids(const ModelParams& p, int n, const GridSpec& xgrid,
                                         const GridSpec& kgrid) {
    const SampledWavefunction wf = normalize_on_grid(p, n, xgrid);
    EntropyPair pair;
    pair.S_x = shannon_entropy(wf.probability_density(), xgrid.spacing());
    const SampledWavefunction phi =
        fourier_transform(wf, kgrid, FourierSign::positive, &pair.parseval_defect);
    pair.S_k = shannon_entropy(phi.probability_density(), kgrid.spacing());
    return pair;
}

} // namespace detail

// Full information pipeline for one state: position grid doubled until S_x
// stabilizes, momentum grid doubled until S_k stabilizes (transformed from
// the converged position samples), Parseval defect recorded at the final
// resolution. Deterministic for fixed inputs.
inline EntropyReport entropy_report(const ModelParams& p, int n, const EntropyOptions& options = {}) {
    p.validate();
    check_quantum_number(n);
    if (!(options.entropy_abs_tol > 0.0))
        throw std::invalid_argument("entropy_report: entropy_abs_tol must be > 0");

    EntropyReport report;
    report.n = n;
    report.omega = p.omega;
    report.bbm = bbm_bound();

    GridSpec xgrid = auto_grid(p, n);
    xgrid.points = options.initial_points;
    xgrid.validate();
    SampledWavefunction wf = detail::normalize_on_grid(p, n, xgrid);
    double S_x = shannon_entropy(wf.probability_density(), xgrid.spacing());
    while (true) {
        if (2 * xgrid.points - 1 > options.max_points) {
            report.x_convergence.final_value = S_x;
            report.x_convergence.converged = false;
            throw NonConvergence("entropy_report: S_x did not stabilize to " +
                                 std::to_string(options.entropy_abs_tol) + " within " +
                                 std::to_string(options.max_points) + " points");
        }
        xgrid = xgrid.doubled();
        SampledWavefunction refined = detail::normalize_on_grid(p, n, xgrid);
        const double next = shannon_entropy(refined.probability_density(), xgrid.spacing());
        ++report.x_convergence.iterations;
        report.x_convergence.last_delta = std::abs(next - S_x);
        S_x = next;
        wf = std::move(refined);
        if (report.x_convergence.last_delta <= options.entropy_abs_tol) {
            report.x_convergence.converged = true;
            break;
        }
    }
    report.x_convergence.final_value = S_x;
    report.S_x = S_x;
    report.x_grid = xgrid;

    GridSpec kgrid = auto_kgrid(p, n);
    kgrid.points = options.initial_points;
    kgrid.validate();
    double defect = 0.0;
    SampledWavefunction phi = fourier_transform(wf, kgrid, FourierSign::positive, &defect);
    double S_k = shannon_entropy(phi.probability_density(), kgrid.spacing());
    while (true) {
        if (2 * kgrid.points - 1 > options.max_points) {
            report.k_convergence.final_value = S_k;
            report.k_convergence.converged = false;
            throw NonConvergence("entropy_report: S_k did not stabilize to " +
                                 std::to_string(options.entropy_abs_tol) + " within " +
                                 std::to_string(options.max_points) + " points");
        }
        kgrid = kgrid.doubled();
        phi = fourier_transform(wf, kgrid, FourierSign::positive, &defect);
        const double next = shannon_entropy(phi.probability_density(), kgrid.spacing());
        ++report.k_convergence.iterations;
        report.k_convergence.last_delta = std::abs(next - S_k);
        S_k = next;
        if (report.k_convergence.last_delta <= options.entropy_abs_tol) {
            report.k_convergence.converged = true;
            break;
        }
    }
    report.k_convergence.final_value = S_k;
    report.S_k = S_k;
    report.k_grid = kgrid;
    report.parseval_defect = defect;

    report.sum = report.S_x + report.S_k;
    report.margin = report.sum - report.bbm;
    return report;
}

// The standard entropy table: every n in ns crossed with every omega in
// omegas, row-major in n. A failing cell aborts with the cell identified.
inline std::vector<EntropyReport> table1(const ModelParams& base,
                                         std::span<const int> ns,
                                         std::span<const double> omegas,
                                         const EntropyOptions& options = {}) {
    base.validate();
    std::vector<EntropyReport> reports;
    reports.reserve(ns.size() * omegas.size());
    for (const int n : ns) {
        for (const double omega : omegas) {
            ModelParams p = base;
            p.omega = omega;
            const std::string cell =
                "(n=" + std::to_string(n) + ", omega=" + std::to_string(omega) + ")";
            try {
                reports.push_back(entropy_report(p, n, options));
            } catch (const NonConvergence& e) {
                throw NonConvergence("table1 cell " + cell + ": " + e.what());
            } catch (const ParsevalViolation& e) {
                throw ParsevalViolation("table1 cell " + cell + ": " + e.what());
            } catch (const TruncationBias& e) {
                throw TruncationBias("table1 cell " + cell + ": " + e.what());
            }
        }
    }
    return reports;
}

inline std::vector<EntropyReport> table1(const ModelParams& base, const EntropyOptions& options = {}) {
    static constexpr int default_ns[] = {0, 1, 2, 3};
    static constexpr double default_omegas[] = {10.0, 100.0, 1000.0};
    return table1(base, default_ns, default_omegas, options);
}

} // namespace landau
