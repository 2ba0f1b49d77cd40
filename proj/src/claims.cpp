#include "goldbug/analysis.hpp"
#include "goldbug/oracle.hpp"

#include <charconv>
#include <cmath>
#include <random>

namespace goldbug {

namespace {

std::string feet_str(const Length& x) { return x.in_feet().str() + " ft"; }

std::string sci(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 3);
    return std::string(buf, res.ptr);
}

std::string bound_str(const Threshold& t) {
    return t.kind == Threshold::Kind::Finite ? feet_str(*t.bound) : std::string(to_string(t.kind));
}

std::string bound_str(const LBound& b) {
    return b.kind == LBound::Kind::Finite ? feet_str(*b.bound) : std::string(to_string(b.kind));
}

}  // namespace

std::vector<ClaimResult> verify_paper_claims(const ClaimInputs& in) {
    std::vector<ClaimResult> out;

    // C1: the non-overlap bound on r+L for two 2 ft holes.
    const auto reach = nonoverlap_threshold(in.r_A, in.r_B, in.d, in.E);
    out.push_back({"C1", "r+L < 250/91", "250/91 ft", bound_str(reach), bound_str(reach) == "250/91 ft"});

    // C2: the same bound displayed to the inch.
    {
        std::string shown = reach.bound ? format_feet_inches(*reach.bound, true) : bound_str(reach);
        out.push_back({"C2", "250/91 ~= 2'9\"", "2'9\"", shown, shown == "2'9\""});
    }

    // C3: subtracting the thinnest plausible trunk radius.
    {
        const auto lb = max_L_for_nonoverlap(in.r_min, in.r_A, in.r_B, in.d, in.E, Convention::FromDropPoint);
        std::string computed = bound_str(lb);
        if (lb.bound) computed += ", " + format_feet_inches(*lb.bound, true);
        const std::string expected = "1409/546 ft, 2'7\"";
        out.push_back({"C3", "L < 2'7\"", expected, computed, computed == expected});
    }

    // C4: closed-form AB against the coordinate construction.
    {
        std::mt19937_64 rng(in.seed);
        double worst = 0.0;
        for (int i = 0; i < in.random_scenarios; ++i) {
            const Scenario s = random_scenario(rng);
            const double exact = to_real_feet(center_distance(s));
            const double coords = center_distance_oracle(s);
            worst = std::max(worst, std::abs(exact - coords) / exact);
        }
        out.push_back({"C4", "AB = 2(r+L+50) sin(theta) = 5(r+L+50)/(24(r+L))", "max relative error < 1e-12",
                       "max relative error = " + sci(worst), worst < 1e-12});
    }

    // C5: every plausible trunk and branch puts the holes on top of each other.
    {
        Scenario base;
        base.d = in.d;
        base.E = in.E;
        base.r_A = in.r_A;
        base.r_B = in.r_B;
        const auto inch = Length::inches(1);
        const std::vector<SweepAxis> axes{
            {SweepParam::r, in.r_min, Length::inches(13), inch},
            {SweepParam::L, in.L_min, Length::feet(10), inch},
        };
        const auto table = sweep(base, axes);
        std::int64_t overlapping = 0;
        for (const auto& row : table.rows) {
            if (row.report && row.report->overlaps) ++overlapping;
        }
        const auto total = static_cast<std::int64_t>(table.rows.size());
        const std::string computed = std::to_string(overlapping) + "/" + std::to_string(total) + " overlap";
        out.push_back({"C5", "r >= 2 in and L >= 3 ft => holes overlap", "1020/1020 overlap", computed,
                       computed == "1020/1020 overlap"});
    }

    // C6: larger second hole only lowers the bound.
    {
        const std::vector<Length> second{Length::feet(2), Length::feet(Rational(9, 4)), Length::feet(Rational(5, 2)),
                                         Length::feet(3)};
        std::string computed;
        bool decreasing = true;
        std::optional<Length> prev;
        for (const auto& rb : second) {
            const auto t = nonoverlap_threshold(in.r_A, rb, in.d, in.E);
            if (!computed.empty()) computed += " > ";
            computed += t.bound ? t.bound->in_feet().str() : std::string(to_string(t.kind));
            if (!t.bound || (prev && !(*t.bound < *prev))) decreasing = false;
            prev = t.bound;
        }
        computed += " ft";
        const std::string expected = "250/91 > 250/97 > 250/103 > 50/23 ft";
        out.push_back({"C6", "r_B >= 2 ft: threshold decreasing in r_B", expected, computed,
                       decreasing && computed == expected});
    }

    // C7: measuring the 50 ft from the trunk is stricter.
    {
        const auto trunk = max_L_for_nonoverlap(in.r_min, in.r_A, in.r_B, in.d, in.E, Convention::FromTrunk);
        const auto drop = max_L_for_nonoverlap(in.r_min, in.r_A, in.r_B, in.d, in.E, Convention::FromDropPoint);
        const bool stricter = trunk.bound && drop.bound && *trunk.bound < *drop.bound;
        const std::string computed = bound_str(trunk) + (stricter ? " < " : " !< ") + bound_str(drop);
        const std::string expected = "1409/576 ft < 1409/546 ft";
        out.push_back({"C7", "L bound (from-trunk) < L bound (from-drop-point)", expected, computed,
                       stricter && computed == expected});
    }

    return out;
}

}  // namespace goldbug
