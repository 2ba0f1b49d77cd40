#include "goldbug/analysis.hpp"
#include "goldbug/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace goldbug;

namespace {

Length ft(std::int64_t n, std::int64_t d = 1) { return Length::feet(Rational(n, d)); }
Length in(std::int64_t n, std::int64_t d = 1) { return Length::inches(Rational(n, d)); }

Scenario with_reach(const Length& r, const Length& L) {
    Scenario s;
    s.r = r;
    s.L = L;
    return s;
}

const Length kD = in(5, 2);
const Length kE = ft(50);

// Lens area by Simpson's rule over x, with both centers on the x axis:
// the overlap at each x is 2 min(hA, hB) where both half-chords exist.
double lens_area_quadrature(double ab, double rA, double rB, int n = 200'000) {
    const double lo = std::max(-rA, ab - rB);
    const double hi = std::min(rA, ab + rB);
    if (hi <= lo) return 0.0;
    auto f = [&](double x) {
        const double ha = rA * rA - x * x;
        const double hb = rB * rB - (x - ab) * (x - ab);
        if (ha <= 0 || hb <= 0) return 0.0;
        return 2.0 * std::min(std::sqrt(ha), std::sqrt(hb));
    };
    const double h = (hi - lo) / n;
    double sum = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) sum += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace

TEST_CASE("overlap_report: verdicts") {
    const auto rep = overlap_report(with_reach(ft(1, 2), ft(7, 2)));
    CHECK(rep.ab == ft(45, 16));
    CHECK(rep.radii_sum == ft(4));
    CHECK(rep.overlaps);
    CHECK(rep.margin == ft(45, 16) - ft(4));
    CHECK(rep.lens_area_sqft > 0.0);

    // Exactly at the threshold the holes touch: not an overlap.
    const auto touch = overlap_report(with_reach(ft(0), ft(250, 91)));
    CHECK(touch.ab == ft(4));
    CHECK(touch.margin.is_zero());
    CHECK_FALSE(touch.overlaps);
    CHECK(touch.lens_area_sqft == 0.0);

    // Holes smaller than d/2 each never meet: ab >= d = 5/24 > 0.2.
    for (const auto& L : {ft(1, 2), ft(3), ft(1'000'000)}) {
        Scenario s = with_reach(ft(0), L);
        s.r_A = ft(1, 10);
        s.r_B = ft(1, 10);
        const auto small = overlap_report(s);
        CHECK_FALSE(small.overlaps);
        CHECK(small.ab > small.radii_sum);
    }

    // The story's thinnest trunk and shortest branch.
    CHECK(overlap_report(with_reach(in(2), ft(3))).overlaps);
    CHECK_THROWS_AS(overlap_report(with_reach(in(0), in(0))), InvalidScenario);
}

TEST_CASE("lens_area: closed cases") {
    CHECK(lens_area(0.0, 2.0, 2.0) == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-15));
    CHECK(lens_area(4.0, 2.0, 2.0) == 0.0);
    CHECK(lens_area(5.0, 2.0, 2.0) == 0.0);
    CHECK(lens_area(0.5, 3.0, 1.0) == doctest::Approx(std::numbers::pi));  // contained
    CHECK(lens_area(2.0, 3.0, 1.0) == doctest::Approx(std::numbers::pi));  // internally tangent

    CHECK_THROWS_AS(lens_area(NAN, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(lens_area(1.0, INFINITY, 1.0), std::domain_error);
    CHECK_THROWS_AS(lens_area(-1.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(lens_area(1.0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("lens_area agrees with quadrature") {
    // r+L = 4 ft layout; frozen from a 30-digit chord-width integral.
    const double quad = lens_area_quadrature(2.8125, 2.0, 2.0);
    CHECK(lens_area(2.8125, 2.0, 2.0) == doctest::Approx(2.328360381327415).epsilon(1e-13));
    CHECK(lens_area(2.8125, 2.0, 2.0) == doctest::Approx(quad).epsilon(1e-6));
    CHECK(lens_area(1.0, 2.0, 1.5) == doctest::Approx(lens_area_quadrature(1.0, 2.0, 1.5)).epsilon(1e-6));
    CHECK(lens_area(3.9, 2.0, 2.5) == doctest::Approx(lens_area_quadrature(3.9, 2.0, 2.5)).epsilon(1e-5));
}

TEST_CASE("property: lens area symmetry, bound and verdict agreement") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5000; ++i) {
        const double rA = 0.1 + 3.0 * unit_uniform(rng);
        const double rB = 0.1 + 3.0 * unit_uniform(rng);
        const double ab = 1.2 * (rA + rB) * unit_uniform(rng);
        const double area = lens_area(ab, rA, rB);
        REQUIRE(area == doctest::Approx(lens_area(ab, rB, rA)).epsilon(1e-12));
        REQUIRE(area <= std::numbers::pi * std::min(rA, rB) * std::min(rA, rB) * (1 + 1e-12));
        REQUIRE((area > 0.0) == (ab < rA + rB));
    }
    for (int i = 0; i < 5000; ++i) {
        const auto rep = overlap_report(random_scenario(rng));
        REQUIRE((rep.lens_area_sqft > 0.0) == rep.overlaps);
        REQUIRE(rep.overlaps == rep.margin.is_negative());
    }
}

TEST_CASE("nonoverlap_threshold") {
    const auto t = nonoverlap_threshold(ft(2), ft(2), kD, kE);
    REQUIRE(t.kind == Threshold::Kind::Finite);
    CHECK(*t.bound == ft(250, 91));

    const auto never = nonoverlap_threshold(ft(5, 96), ft(5, 96), kD, kE);
    CHECK(never.kind == Threshold::Kind::AlwaysNonoverlap);
    CHECK_FALSE(never.bound.has_value());
    // S == d knife edge
    CHECK(nonoverlap_threshold(in(5, 4), in(5, 4), kD, kE).kind == Threshold::Kind::AlwaysNonoverlap);

    CHECK(*nonoverlap_threshold(ft(5, 2), ft(5, 2), kD, kE).bound == ft(50, 23));

    // Generalized d E / (S - d) equals 250 / (24 S - 5) at the defaults.
    for (int k = 1; k <= 40; ++k) {
        const auto half = ft(k, 8);
        const auto S = (half + half).in_feet();
        if (S <= Rational(5, 24)) continue;
        CHECK(nonoverlap_threshold(half, half, kD, kE).bound->in_feet() == Rational(250) / (Rational(24) * S - 5));
    }

    CHECK_THROWS_AS(nonoverlap_threshold(ft(0), ft(2), kD, kE), InvalidScenario);
}

TEST_CASE("nonoverlap_threshold_from_trunk") {
    const auto t = nonoverlap_threshold_from_trunk(in(2), ft(2), ft(2), kD, kE);
    REQUIRE(t.kind == Threshold::Kind::Finite);
    CHECK(*t.bound == ft(1505, 576));
    CHECK(*t.bound < ft(250, 91));

    const auto zero = nonoverlap_threshold_from_trunk(in(0), ft(2), ft(2), kD, in(0));
    CHECK(zero.kind == Threshold::Kind::Finite);
    CHECK(zero.bound->is_zero());
}

TEST_CASE("max_L_for_nonoverlap") {
    const auto lb = max_L_for_nonoverlap(in(2), ft(2), ft(2), kD, kE, Convention::FromDropPoint);
    REQUIRE(lb.kind == LBound::Kind::Finite);
    CHECK(*lb.bound == ft(1409, 546));
    CHECK(format_feet_inches(*lb.bound, true) == "2'7\"");

    CHECK(max_L_for_nonoverlap(ft(3), ft(2), ft(2), kD, kE, Convention::FromDropPoint).kind ==
          LBound::Kind::NoValidL);

    const auto bare = max_L_for_nonoverlap(in(0), ft(2), ft(2), kD, kE, Convention::FromDropPoint);
    CHECK(*bare.bound == *bare.reach_threshold.bound);

    CHECK(max_L_for_nonoverlap(in(2), in(1), in(1), kD, kE, Convention::FromDropPoint).kind ==
          LBound::Kind::AlwaysNonoverlap);

    const auto trunk = max_L_for_nonoverlap(in(2), ft(2), ft(2), kD, kE, Convention::FromTrunk);
    CHECK(*trunk.bound == ft(1505, 576) - in(2));
    CHECK(*trunk.bound == ft(1409, 576));
    CHECK(*trunk.bound < *lb.bound);
}

TEST_CASE("property: thresholds separate overlap from non-overlap") {
    std::mt19937_64 rng(17);
    const Rational below(999'999, 1'000'000);
    const Rational above(1'000'001, 1'000'000);
    int checked_trunk = 0;
    for (int i = 0; i < 2000; ++i) {
        const auto rA = in(static_cast<std::int64_t>(rng() % 96) + 2, static_cast<std::int64_t>(rng() % 4) + 1);
        const auto rB = in(static_cast<std::int64_t>(rng() % 96) + 2, static_cast<std::int64_t>(rng() % 4) + 1);
        if (rA + rB <= kD) continue;

        const auto t = nonoverlap_threshold(rA, rB, kD, kE);
        REQUIRE(t.kind == Threshold::Kind::Finite);
        for (const auto& [factor, expect] : {std::pair{below, false}, std::pair{above, true}}) {
            Scenario s = with_reach(in(0), *t.bound * factor);
            s.r_A = rA;
            s.r_B = rB;
            if (s.d / Rational(2) > s.L) continue;
            REQUIRE(overlap_report(s).overlaps == expect);
        }

        const auto r = in(static_cast<std::int64_t>(rng() % 12));
        const auto tt = nonoverlap_threshold_from_trunk(r, rA, rB, kD, kE);
        for (const auto& [factor, expect] : {std::pair{below, false}, std::pair{above, true}}) {
            Scenario s = with_reach(r, *tt.bound * factor - r);
            s.r_A = rA;
            s.r_B = rB;
            s.convention = Convention::FromTrunk;
            if (!s.L.is_positive() || s.d / Rational(2) > s.r + s.L) continue;
            REQUIRE(overlap_report(s).overlaps == expect);
            ++checked_trunk;
        }

        // Convention dominance on the L bound.
        const auto drop_L = max_L_for_nonoverlap(r, rA, rB, kD, kE, Convention::FromDropPoint);
        const auto trunk_L = max_L_for_nonoverlap(r, rA, rB, kD, kE, Convention::FromTrunk);
        if (trunk_L.bound) REQUIRE(*trunk_L.bound < *drop_L.bound);
    }
    CHECK(checked_trunk > 1000);
}

TEST_CASE("property: a larger hole lowers the bound") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 2000; ++i) {
        const auto a = in(static_cast<std::int64_t>(rng() % 200) + 3);
        const auto b = in(static_cast<std::int64_t>(rng() % 200) + 3);
        if (a == b) continue;
        const auto small = std::min(a, b);
        const auto large = std::max(a, b);
        const auto ts = nonoverlap_threshold(small, ft(2), kD, kE);
        const auto tl = nonoverlap_threshold(large, ft(2), kD, kE);
        REQUIRE(*tl.bound < *ts.bound);
    }
}

TEST_CASE("sweep: grid and verdicts") {
    Scenario base;
    const std::vector<SweepAxis> axes{{SweepParam::L, ft(5, 2), ft(3), ft(1, 4)}};
    const auto table = sweep(base, axes);
    REQUIRE(table.rows.size() == 3);
    const auto threshold = ft(250, 91);
    for (const auto& row : table.rows) {
        REQUIRE(row.report.has_value());
        CHECK(row.report->overlaps == (row.values[0] > threshold));
    }
    CHECK_FALSE(table.rows[0].report->overlaps);  // 2.5 ft
    CHECK(table.rows[1].report->overlaps);        // 2.75 ft > 250/91 ft
    CHECK(table.rows[2].report->overlaps);        // 3 ft

    CHECK(sweep(base, {{SweepParam::L, ft(3), ft(3), ft(1)}}).rows.size() == 1);

    const auto grid = sweep(base, {{SweepParam::r_A, ft(1), ft(3), ft(1)}, {SweepParam::L, ft(1), ft(3), ft(1)}});
    REQUIRE(grid.rows.size() == 9);
    // first axis slowest
    CHECK(grid.rows[0].values == std::vector<Length>{ft(1), ft(1)});
    CHECK(grid.rows[1].values == std::vector<Length>{ft(1), ft(2)});
    CHECK(grid.rows[3].values == std::vector<Length>{ft(2), ft(1)});
    CHECK(grid.rows[8].values == std::vector<Length>{ft(3), ft(3)});

    // a stop that is not on the grid is not sampled
    CHECK(sweep(base, {{SweepParam::L, ft(1), ft(2), ft(2, 3)}}).rows.size() == 2);
}

TEST_CASE("sweep: invalid grid points become flagged rows") {
    Scenario base;
    const auto table = sweep(base, {{SweepParam::L, ft(0), ft(1), ft(1, 2)}});
    REQUIRE(table.rows.size() == 3);
    CHECK_FALSE(table.rows[0].report.has_value());
    CHECK(table.rows[0].error.find("L must be > 0") != std::string::npos);
    CHECK(table.rows[1].report.has_value());
    CHECK(table.rows[2].report.has_value());
}

TEST_CASE("sweep: malformed requests") {
    Scenario base;
    base.L = ft(3);
    CHECK_THROWS_AS(sweep(base, {}), SweepError);
    CHECK_THROWS_AS(sweep(base, {{SweepParam::L, ft(1), ft(2), ft(0)}}), SweepError);
    CHECK_THROWS_AS(sweep(base, {{SweepParam::L, ft(2), ft(1), ft(1)}}), SweepError);
    CHECK_THROWS_AS(sweep(base, {{SweepParam::L, ft(1), ft(2), ft(1)},
                                 {SweepParam::r, ft(1), ft(2), ft(1)},
                                 {SweepParam::E, ft(1), ft(2), ft(1)}}),
                    SweepError);
    CHECK_THROWS_AS(sweep(base, {{SweepParam::L, ft(1), ft(2), ft(1)}, {SweepParam::L, ft(1), ft(2), ft(1)}}),
                    SweepError);
    CHECK_THROWS_AS(sweep(base, {{SweepParam::L, in(1), in(2'000'000), in(1)}}), SweepError);
    CHECK_THROWS_AS(sweep(base, {{SweepParam::L, in(1), in(1001), in(1)}, {SweepParam::r, in(0), in(1000), in(1)}}),
                    SweepError);
    CHECK(sweep(base, {{SweepParam::L, in(1), in(1000), in(1)}, {SweepParam::r, in(1), in(1000), in(1)}}).rows.size() ==
          1'000'000);
}

TEST_CASE("sweep is deterministic") {
    Scenario base;
    const std::vector<SweepAxis> axes{{SweepParam::r, in(0), in(12), in(1)}, {SweepParam::L, ft(2), ft(4), in(1)}};
    CHECK(sweep(base, axes) == sweep(base, axes));
}

TEST_CASE("claim suite") {
    const auto claims = verify_paper_claims();
    REQUIRE(claims.size() == 7);
    for (const auto& c : claims) {
        INFO(c.id << ": expected " << c.expected << ", computed " << c.computed);
        CHECK(c.pass);
    }
    CHECK(claims[0].computed == "250/91 ft");
    CHECK(claims[1].computed == "2'9\"");

    ClaimInputs wrong;
    wrong.d = in(3);
    const auto broken = verify_paper_claims(wrong);
    CHECK_FALSE(broken[0].pass);
    CHECK_FALSE(broken[2].pass);
}
