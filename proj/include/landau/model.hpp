#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace landau {

// Polynomial degree ceiling for the quantum number; beyond this the
// high-degree evaluations start to lose precision silently.
inline constexpr int max_quantum_number = 64;

// Physical constants and field configuration. Single source of truth for
// every symbol; alpha is derived from theta so the spectrum offset and the
// wavefunction tilt can never disagree. The field strength enters only
// through the cyclotron frequency omega.
struct ModelParams {
    double m = 1.0;     // mass
    double hbar = 1.0;  // reduced Planck constant
    double k_B = 1.0;   // Boltzmann constant
    double omega = 1.0; // cyclotron frequency
    double theta = 1.0; // tilt parameter (inverse length); theta = 0 is the Hermitian limit
    double p_y = 1.0;   // conserved transverse momentum
    long N = 1;         // particle count

    // Derived, read-only quantities.
    double alpha() const { return theta * hbar / (2.0 * m); }
    double spectrum_offset() const { return m * alpha() * alpha(); } // m*alpha^2
    double length_scale() const { return std::sqrt(hbar / (m * omega)); }
    double inv_length_scale() const { return std::sqrt(m * omega / hbar); }
    double center_x() const { return p_y / (m * omega); }
    // Dimensionless tilt strength (theta/2)*sqrt(hbar/(m*omega)).
    double tilt() const { return 0.5 * theta * length_scale(); }

    void validate() const {
        if (!(m > 0.0)) throw std::invalid_argument("ModelParams: m must be > 0");
        if (!(hbar > 0.0)) throw std::invalid_argument("ModelParams: hbar must be > 0");
        if (!(k_B > 0.0)) throw std::invalid_argument("ModelParams: k_B must be > 0");
        if (!(omega > 0.0)) throw std::invalid_argument("ModelParams: omega must be > 0");
        if (!std::isfinite(theta)) throw std::invalid_argument("ModelParams: theta must be finite");
        if (!std::isfinite(p_y)) throw std::invalid_argument("ModelParams: p_y must be finite");
        if (N < 1) throw std::invalid_argument("ModelParams: N must be >= 1");
    }
};

inline void check_quantum_number(int n) {
    if (n < 0) throw std::invalid_argument("quantum number must be >= 0");
    if (n > max_quantum_number)
        throw std::invalid_argument("quantum number exceeds ceiling " +
                                    std::to_string(max_quantum_number));
}

// Energy of level n: (2n + 3/2)*hbar*omega + m*alpha^2.
// Levels are equally spaced by 2*hbar*omega and independent of p_y.
inline double energy(const ModelParams& p, int n) {
    p.validate();
    check_quantum_number(n);
    return (2.0 * n + 1.5) * p.hbar * p.omega + p.spectrum_offset();
}

// Complex dimensionless coordinate: sqrt(m*omega/hbar) * (x - p_y/(m*omega)
// - i*theta*hbar/(2*m*omega)). The imaginary part is constant in x.
inline std::complex<double> xi_of_x(const ModelParams& p, double x) {
    const double s = p.inv_length_scale();
    return {s * (x - p.center_x()), -p.tilt()};
}

// Terminating Kummer series 1F1(-n, 3/2; z): an exact (n+1)-term polynomial.
// Terms are updated by the ratio (-n+k)/((3/2+k)(k+1)) * z, so there is no
// truncation error by construction.
inline std::complex<double> kummer_poly(int n, std::complex<double> z) {
    check_quantum_number(n);
    std::complex<double> sum{1.0, 0.0};
    std::complex<double> term{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        term *= z * (static_cast<double>(-n + k) / ((1.5 + k) * (k + 1.0)));
        sum += term;
    }
    return sum;
}

} // namespace landau
