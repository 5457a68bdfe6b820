// Minimal library walkthrough: normalize a state, transform it, and print
// the position/momentum entropies with the uncertainty-bound margin.

#include <cstdio>

#include "landau/landau.hpp"

int main() {
    landau::ModelParams params; // m = hbar = k_B = p_y = theta = 1

    std::printf("state   omega        S_x        S_k        sum     margin\n");
    for (const int n : {0, 1}) {
        for (const double omega : {10.0, 100.0}) {
            params.omega = omega;
            const landau::EntropyReport r = landau::entropy_report(params, n);
            std::printf("n=%d  %8.1f  %9.5f  %9.5f  %9.5f  %9.5f\n", n, omega, r.S_x, r.S_k,
                        r.sum, r.margin);
        }
    }
    std::printf("\nbound: S_x + S_k >= 1 + ln(pi) = %.5f for every state\n", landau::bbm_bound());

    // The pieces behind one report, spelled out.
    params.omega = 10.0;
    const landau::SampledWavefunction psi = landau::normalize(params, 0, landau::auto_grid(params, 0));
    double defect = 0.0;
    const landau::SampledWavefunction phi =
        landau::fourier_transform(psi, landau::auto_kgrid(params, 0), landau::FourierSign::positive,
                                  &defect);
    std::printf("pipeline check at (n=0, omega=10): S_x=%.6f, S_k=%.6f, transform norm defect %.2e\n",
                landau::shannon_entropy(psi.probability_density(), psi.grid.spacing()),
                landau::shannon_entropy(phi.probability_density(), phi.grid.spacing()), defect);
    return 0;
}
