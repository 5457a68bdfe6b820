#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "landau/model.hpp"

namespace landau {

// Ground-state energy per particle: m*alpha^2 + (3/2)*hbar*omega.
inline double ground_energy(const ModelParams& p) {
    return p.spectrum_offset() + 1.5 * p.hbar * p.omega;
}

// Dimensionless level gap 2*hbar*omega*beta; every thermodynamic quantity
// below is a function of it plus the additive ground energy.
inline double thermo_gap(const ModelParams& p, double beta) { return 2.0 * p.hbar * p.omega * beta; }

// ln Z1 = -E0*beta - ln(1 - exp(-g)), organized around log1p/expm1 so it
// stays finite and accurate for any beta > 0.
inline double log_partition_closed(const ModelParams& p, double beta) {
    p.validate();
    if (!(beta > 0.0)) throw std::invalid_argument("log_partition_closed: beta must be > 0");
    const double g = thermo_gap(p, beta);
    return -ground_energy(p) * beta - std::log1p(-std::exp(-g));
}

// Closed-form single-particle partition function. For very large beta the
// value underflows; it is returned as 0/denormal with the flag set, never
// NaN. The N-particle function is Z1^N (distinguishable particles).
struct PartitionValue {
    double value = 0.0;
    bool underflowed = false;
};

inline PartitionValue partition_closed(const ModelParams& p, double beta) {
    const double log_z = log_partition_closed(p, beta);
    PartitionValue result;
    result.value = std::exp(log_z);
    result.underflowed = !std::isnormal(result.value);
    return result;
}

// Truncated Boltzmann sum over the level spectrum, as an oracle for the
// closed form. tail_ok is false when the geometric tail bound exceeds
// 1e-12 of the sum, i.e. when n_max was too small to trust the value.
struct SeriesResult {
    double value = 0.0;
    double tail_bound = 0.0;
    bool tail_ok = false;
    int terms = 0;
};

inline SeriesResult partition_series(const ModelParams& p, double beta, int n_max) {
    p.validate();
    if (!(beta > 0.0)) throw std::invalid_argument("partition_series: beta must be > 0");
    if (n_max < 1) throw std::invalid_argument("partition_series: n_max must be >= 1");
    const double g = thermo_gap(p, beta);
    const double ground = std::exp(-ground_energy(p) * beta);
    const double x = std::exp(-g);
    double sum = 0.0;
    double power = 1.0;
    for (int n = 0; n <= n_max; ++n) {
        sum += power;
        power *= x;
    }
    SeriesResult result;
    result.value = ground * sum;
    result.terms = n_max + 1;
    // power now holds x^(n_max+1); the tail is a geometric series.
    result.tail_bound = ground * power / (-std::expm1(-g));
    result.tail_ok = result.tail_bound <= 1e-12 * result.value;
    return result;
}

// Series with n_max chosen from the tail bound so the truncation error is
// below 1e-13 of the total.
inline SeriesResult partition_series_adaptive(const ModelParams& p, double beta) {
    p.validate();
    if (!(beta > 0.0)) throw std::invalid_argument("partition_series: beta must be > 0");
    const double g = thermo_gap(p, beta);
    const int n_max = std::max(1, static_cast<int>(std::ceil(30.0 / g)) + 1);
    return partition_series(p, beta, n_max);
}

// Per-particle thermodynamic state at temperature tau = k_B*T.
struct ThermoPoint {
    double tau = 0.0;
    double beta = 0.0;
    double F_per_N = 0.0;
    double U_per_N = 0.0;
    double S_per_NkB = 0.0;
    double Cv_per_NkB = 0.0;
};

// All four canonical-ensemble functions from the closed partition function,
// rearranged around expm1/log1p/sinh so every quantity stays finite and
// non-negative over the whole temperature range (Boltzmann factors underflow
// gracefully at large beta instead of producing NaN).
inline ThermoPoint thermo_point(const ModelParams& p, double tau) {
    p.validate();
    if (!(tau > 0.0)) throw std::invalid_argument("thermo_point: tau must be > 0");
    const double beta = 1.0 / tau;
    const double g = thermo_gap(p, beta);
    const double e0 = ground_energy(p);
    ThermoPoint point;
    point.tau = tau;
    point.beta = beta;
    point.F_per_N = e0 + tau * std::log1p(-std::exp(-g));
    point.U_per_N = e0 + 2.0 * p.hbar * p.omega / std::expm1(g);
    point.S_per_NkB = g / std::expm1(g) - std::log1p(-std::exp(-g));
    const double sh = std::sinh(0.5 * g);
    const double ratio = 0.5 * g / sh; // -> 1 as g -> 0, -> 0 at large g
    point.Cv_per_NkB = ratio * ratio;
    return point;
}

struct ThermoCurve {
    double omega = 0.0;
    std::vector<ThermoPoint> points;
};

// Log-spaced temperature sweep, tau strictly increasing.
inline ThermoCurve thermo_curve(const ModelParams& p, double tau_min, double tau_max, int points) {
    p.validate();
    if (!(tau_min > 0.0) || !(tau_max > tau_min))
        throw std::invalid_argument("thermo_curve: need 0 < tau_min < tau_max");
    if (points < 2) throw std::invalid_argument("thermo_curve: points must be >= 2");
    ThermoCurve curve;
    curve.omega = p.omega;
    curve.points.reserve(static_cast<std::size_t>(points));
    const double log_ratio = std::log(tau_max / tau_min);
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        curve.points.push_back(thermo_point(p, tau_min * std::exp(t * log_ratio)));
    }
    return curve;
}

// Finite-difference validation of the derivative identities
//   U = -d(ln Z)/d(beta), S = k_B*beta^2*dF/dbeta, C_v = -k_B*beta^2*dU/dbeta.
// The stencils are evaluated in 50-digit floating point: in the stiff regime
// (gap >> 1) the derivative signals sit as far as ~e^-1000 below the function
// values, which double-precision differencing cannot resolve at any step
// size. Relative defects are floored at 1e-30 in the denominator because the
// closed-form C_v itself underflows double precision there.
struct DerivativeDefects {
    double u_defect = 0.0;
    double s_defect = 0.0;
    double cv_defect = 0.0;
    double legendre_defect = 0.0;
    double max_fd_defect() const {
        return std::max(u_defect, std::max(s_defect, cv_defect));
    }
};

inline DerivativeDefects crosscheck_derivatives(const ModelParams& p, double tau) {
    using big = boost::multiprecision::cpp_bin_float_50;
    p.validate();
    if (!(tau > 0.0)) throw std::invalid_argument("crosscheck_derivatives: tau must be > 0");

    const big e0 = big(p.spectrum_offset()) + big(1.5) * big(p.hbar) * big(p.omega);
    const big two_hw = big(2.0) * big(p.hbar) * big(p.omega);
    const auto log_z1 = [&](const big& beta) { return -e0 * beta - log(1 - exp(-two_hw * beta)); };
    const auto free_energy = [&](const big& beta) {
        return e0 + log(1 - exp(-two_hw * beta)) / beta;
    };
    const auto internal_energy = [&](const big& beta) {
        return e0 + two_hw / (exp(two_hw * beta) - 1);
    };

    const big beta = 1 / big(tau);
    const big h = big(1e-6) * beta; // relative step
    const auto central = [&](const auto& f) { return (f(beta + h) - f(beta - h)) / (2 * h); };

    const big u_fd = -central(log_z1);
    const big s_fd = big(p.k_B) * beta * beta * central(free_energy);
    const big cv_fd = -big(p.k_B) * beta * beta * central(internal_energy);

    const ThermoPoint closed = thermo_point(p, tau);
    const auto defect = [](const big& fd, double reference) {
        const big ref(reference);
        big denom = fabs(ref);
        if (denom < big(1e-30)) denom = big(1e-30);
        return static_cast<double>(fabs(fd - ref) / denom);
    };

    DerivativeDefects defects;
    defects.u_defect = defect(u_fd, closed.U_per_N);
    defects.s_defect = defect(s_fd, closed.S_per_NkB * p.k_B);
    defects.cv_defect = defect(cv_fd, closed.Cv_per_NkB * p.k_B);
    const double lhs = closed.F_per_N;
    const double rhs = closed.U_per_N - tau * closed.S_per_NkB;
    defects.legendre_defect =
        std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return defects;
}

} // namespace landau
