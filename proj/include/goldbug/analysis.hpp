#pragma once

// Overlap verdicts, non-overlap thresholds and parameter sweeps.

#include "goldbug/scenario.hpp"
#include "goldbug/units.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace goldbug {

struct OverlapReport {
    Length ab;          // center distance
    Length radii_sum;   // r_A + r_B
    bool overlaps = false;
    Length margin;      // ab - radii_sum; tangency (0) is not an overlap
    double lens_area_sqft = 0.0;
    Scenario scenario;

    friend bool operator==(const OverlapReport&, const OverlapReport&) = default;
};

OverlapReport overlap_report(const Scenario& s);

// Area of intersection of two circles whose centers are ab apart (square feet
// when the inputs are feet). Throws std::domain_error for non-finite input,
// negative ab or non-positive radii.
double lens_area(double ab, double r_A, double r_B);

// Supremum of r+L for which the holes do not overlap.
struct Threshold {
    enum class Kind { Finite, AlwaysNonoverlap };

    Kind kind = Kind::Finite;
    std::optional<Length> bound;  // set iff kind == Finite

    friend bool operator==(const Threshold&, const Threshold&) = default;
};

std::string_view to_string(Threshold::Kind k) noexcept;

// Extension measured from the drop points. With S = r_A + r_B the holes stay
// apart iff r+L < d E / (S - d); when S <= d they never overlap.
Threshold nonoverlap_threshold(const Length& r_A, const Length& r_B, const Length& d, const Length& E);

// Extension measured from the trunk: r+L < d (r+E) / S. Always finite.
Threshold nonoverlap_threshold_from_trunk(const Length& r, const Length& r_A, const Length& r_B, const Length& d,
                                          const Length& E);

// The r+L threshold for the given convention, with r subtracted.
struct LBound {
    enum class Kind { Finite, AlwaysNonoverlap, NoValidL };

    Kind kind = Kind::Finite;
    std::optional<Length> bound;  // set iff kind == Finite; always > 0
    Threshold reach_threshold;    // the underlying bound on r+L

    friend bool operator==(const LBound&, const LBound&) = default;
};

std::string_view to_string(LBound::Kind k) noexcept;

LBound max_L_for_nonoverlap(const Length& r, const Length& r_A, const Length& r_B, const Length& d, const Length& E,
                            Convention convention);

// Sweeps ---------------------------------------------------------------------

enum class SweepParam { r, L, r_A, r_B, E };

std::string_view to_string(SweepParam p) noexcept;
// "r", "L", "rA", "rB", "E" (also "r_A", "r_B").
SweepParam parse_sweep_param(std::string_view text);

struct SweepAxis {
    SweepParam param = SweepParam::L;
    Length start;
    Length stop;
    Length step;

    // Samples start, start+step, ... up to and including stop when it lands on the grid.
    [[nodiscard]] std::int64_t sample_count() const;

    friend bool operator==(const SweepAxis&, const SweepAxis&) = default;
};

struct SweepRow {
    std::vector<Length> values;           // one per axis, same order as SweepTable::axes
    std::optional<OverlapReport> report;  // empty when the grid point is invalid
    std::string error;                    // why the grid point is invalid

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepTable {
    Scenario base;
    std::vector<SweepAxis> axes;
    std::vector<SweepRow> rows;

    friend bool operator==(const SweepTable&, const SweepTable&) = default;
};

inline constexpr std::int64_t kMaxSweepRows = 1'000'000;

// Raised for malformed sweep requests (axis count, step, range, row budget).
class SweepError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Rows are ordered lexicographically by axis, the first axis varying slowest.
// Grid points that break a Scenario invariant (or overflow) become rows with
// an error instead of aborting the sweep.
SweepTable sweep(const Scenario& base, const std::vector<SweepAxis>& axes);

// Claim suite ----------------------------------------------------------------

struct ClaimResult {
    std::string id;
    std::string quote;
    std::string expected;
    std::string computed;
    bool pass = false;
};

// Inputs the claim suite computes from. Defaults are the story's values;
// overriding one is how the harness self-test injects a wrong constant.
struct ClaimInputs {
    Length d = Length::inches(Rational(5, 2));
    Length E = Length::feet(50);
    Length r_A = Length::feet(2);
    Length r_B = Length::feet(2);
    Length r_min = Length::inches(2);  // thinnest plausible trunk at the branch
    Length L_min = Length::feet(3);    // skull at least this far out on the branch
    std::uint64_t seed = 0x5eed'601dULL;
    int random_scenarios = 10'000;
};

std::vector<ClaimResult> verify_paper_claims(const ClaimInputs& inputs = {});

}  // namespace goldbug
