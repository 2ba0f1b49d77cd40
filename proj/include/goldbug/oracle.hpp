#pragma once

// Brute-force cross checks for the closed forms in analysis.
//
// Random numbers come from std::mt19937_64, whose output sequence is fixed by
// the C++ standard, and are mapped to [0, 1) with the top 53 bits. No
// std::*_distribution is used, so estimates are identical on every platform.
// Golden Monte Carlo values depend on this choice; do not change it.

#include "goldbug/scenario.hpp"

#include <cstdint>
#include <random>

namespace goldbug {

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

// |A - B| from hole centers placed by rotating (D, 0) through +/- theta,
// theta = asin((d/2)/(r+L)). Does not use the similar-triangles ratio.
double center_distance_oracle(const Scenario& s);

inline constexpr std::int64_t kMinMcSamples = 1000;

// Uniform samples in disk A; value = (fraction also inside B) * pi r_A^2.
// std_error is the binomial standard error on the same scale.
// Throws std::invalid_argument when samples < 1000 or a radius is not positive.
McEstimate lens_area_mc(double ab, double r_A, double r_B, std::int64_t samples, std::uint64_t seed);

inline constexpr int kMinCellsPerFoot = 16;

// Rasterizes the plan view and reports whether any cell center lies strictly
// inside both holes. One-sided: may miss a sliver thinner than a cell, never
// reports an overlap that is not there.
bool overlap_oracle_grid(const Scenario& s, int cells_per_foot);

// Uniform double in [0, 1) from the top 53 bits.
double unit_uniform(std::mt19937_64& rng) noexcept;

// A random Scenario that satisfies every invariant, with small exact
// rational fields (denominators up to 16 inches).
Scenario random_scenario(std::mt19937_64& rng);

}  // namespace goldbug
