#pragma once

#include <array>

namespace landau {

// Embedded reference entropies for the standard 12-cell table, shipped
// inside the binary so `table1 --compare` needs no external files.
struct ReferenceEntropy {
    int n;
    double omega;
    double S_x;
    double S_k;
};

inline constexpr std::array<ReferenceEntropy, 12> reference_entropies{{
    {0, 10.0, 0.07511, 2.58794},
    {0, 100.0, -1.24617, 3.93031},
    {0, 1000.0, -2.44074, 5.12615},
    {1, 10.0, 0.29949, 2.51618},
    {1, 100.0, -1.33164, 3.91697},
    {1, 1000.0, -2.59974, 5.15778},
    {2, 10.0, 0.34254, 2.33426},
    {2, 100.0, -1.35202, 3.89831},
    {2, 1000.0, -2.62173, 5.16562},
    {3, 10.0, 0.35207, 2.19412},
    {3, 100.0, -1.35095, 3.88301},
    {3, 1000.0, -2.62896, 5.16816},
}};

} // namespace landau
