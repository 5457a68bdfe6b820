#pragma once

#include <stdexcept>

namespace landau {

// Grid doubling hit its point cap before the watched quantity stabilized.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sampled state fails the edge-decay requirement: the grid is too narrow
// and the integral would be silently biased.
struct TruncationBias : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The momentum-space norm strayed too far from 1 before renormalization,
// signalling under-resolved grids.
struct ParsevalViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A density handed to the entropy integrator does not integrate to 1.
struct UnnormalizedDensity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An entropy pair fell below the entropic uncertainty lower bound.
struct BbmViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace landau
