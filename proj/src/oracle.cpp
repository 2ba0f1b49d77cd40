#include "goldbug/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace goldbug {

double center_distance_oracle(const Scenario& s) {
    const double reach = to_real_feet(s.r + s.L);
    const double half_d = to_real_feet(s.d) / 2.0;
    const double theta = std::asin(std::min(1.0, half_d / reach));
    const double D = to_real_feet(dig_center_radius(s));

    const Point A{D * std::cos(theta), D * std::sin(theta)};
    const Point B{D * std::cos(-theta), D * std::sin(-theta)};
    return distance(A, B);
}

double unit_uniform(std::mt19937_64& rng) noexcept {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

McEstimate lens_area_mc(double ab, double r_A, double r_B, std::int64_t samples, std::uint64_t seed) {
    if (samples < kMinMcSamples) throw std::invalid_argument("lens_area_mc: need at least 1000 samples");
    if (!(r_A > 0.0) || !(r_B > 0.0) || !std::isfinite(r_A) || !std::isfinite(r_B)) {
        throw std::invalid_argument("lens_area_mc: radii must be positive and finite");
    }
    if (!std::isfinite(ab) || ab < 0.0) throw std::invalid_argument("lens_area_mc: ab must be finite and >= 0");

    std::mt19937_64 rng(seed);
    const double rA2 = r_A * r_A;
    const double rB2 = r_B * r_B;
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        double x = 0.0;
        double y = 0.0;
        do {
            x = (2.0 * unit_uniform(rng) - 1.0) * r_A;
            y = (2.0 * unit_uniform(rng) - 1.0) * r_A;
        } while (x * x + y * y >= rA2);
        const double dx = x - ab;
        if (dx * dx + y * y < rB2) ++hits;
    }

    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / n;
    const double disk = std::numbers::pi * r_A * r_A;
    return McEstimate{p * disk, std::sqrt(p * (1.0 - p) / n) * disk, samples, seed};
}

bool overlap_oracle_grid(const Scenario& s, int cells_per_foot) {
    if (cells_per_foot < kMinCellsPerFoot) throw std::invalid_argument("overlap_oracle_grid: need >= 16 cells per foot");
    const auto lay = layout(s);
    const double rA = to_real_feet(s.r_A);
    const double rB = to_real_feet(s.r_B);

    // Only cells inside both bounding boxes can lie inside both circles.
    const double x0 = std::max(lay.A.x - rA, lay.B.x - rB);
    const double x1 = std::min(lay.A.x + rA, lay.B.x + rB);
    const double y0 = std::max(lay.A.y - rA, lay.B.y - rB);
    const double y1 = std::min(lay.A.y + rA, lay.B.y + rB);
    if (x0 >= x1 || y0 >= y1) return false;

    const double c = cells_per_foot;
    const auto i0 = static_cast<std::int64_t>(std::floor(x0 * c));
    const auto i1 = static_cast<std::int64_t>(std::ceil(x1 * c));
    const auto j0 = static_cast<std::int64_t>(std::floor(y0 * c));
    const auto j1 = static_cast<std::int64_t>(std::ceil(y1 * c));
    const double rA2 = rA * rA;
    const double rB2 = rB * rB;
    for (auto i = i0; i <= i1; ++i) {
        const double x = (static_cast<double>(i) + 0.5) / c;
        const double ax = x - lay.A.x;
        const double bx = x - lay.B.x;
        for (auto j = j0; j <= j1; ++j) {
            const double y = (static_cast<double>(j) + 0.5) / c;
            const double ay = y - lay.A.y;
            const double by = y - lay.B.y;
            if (ax * ax + ay * ay < rA2 && bx * bx + by * by < rB2) return true;
        }
    }
    return false;
}

Scenario random_scenario(std::mt19937_64& rng) {
    auto pick = [&rng](std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto inches = [&](std::int64_t lo, std::int64_t hi) {
        const auto num = pick(lo, hi);  // separate statements: argument order is unspecified
        const auto den = pick(1, 16);
        return Length::inches(Rational(num, den));
    };

    for (;;) {
        Scenario s;
        s.r = inches(0, 480);
        s.L = inches(1, 2400);
        s.d = inches(1, 120);
        s.E = inches(0, 14400);
        s.r_A = inches(1, 72);
        s.r_B = inches(1, 72);
        s.convention = pick(0, 1) == 0 ? Convention::FromDropPoint : Convention::FromTrunk;
        try {
            validate(s);
            return s;
        } catch (const InvalidScenario&) {
            // draw again
        }
    }
}

}  // namespace goldbug
