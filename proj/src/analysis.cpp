#include "goldbug/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace goldbug {

OverlapReport overlap_report(const Scenario& s) {
    validate(s);
    OverlapReport out;
    out.scenario = s;
    out.ab = center_distance(s);
    out.radii_sum = s.r_A + s.r_B;
    out.margin = out.ab - out.radii_sum;
    out.overlaps = out.margin.is_negative();
    out.lens_area_sqft =
        out.overlaps ? lens_area(to_real_feet(out.ab), to_real_feet(s.r_A), to_real_feet(s.r_B)) : 0.0;
    return out;
}

double lens_area(double ab, double r_A, double r_B) {
    if (!std::isfinite(ab) || !std::isfinite(r_A) || !std::isfinite(r_B)) {
        throw std::domain_error("lens_area: non-finite input");
    }
    if (ab < 0.0) throw std::domain_error("lens_area: negative center distance");
    if (r_A <= 0.0 || r_B <= 0.0) throw std::domain_error("lens_area: radii must be positive");

    if (ab >= r_A + r_B) return 0.0;
    if (ab <= std::abs(r_A - r_B)) {
        const double r = std::min(r_A, r_B);
        return std::numbers::pi * r * r;
    }
    const double ca = std::clamp((ab * ab + r_A * r_A - r_B * r_B) / (2.0 * ab * r_A), -1.0, 1.0);
    const double cb = std::clamp((ab * ab + r_B * r_B - r_A * r_A) / (2.0 * ab * r_B), -1.0, 1.0);
    const double k = (-ab + r_A + r_B) * (ab + r_A - r_B) * (ab - r_A + r_B) * (ab + r_A + r_B);
    return r_A * r_A * std::acos(ca) + r_B * r_B * std::acos(cb) - 0.5 * std::sqrt(std::max(0.0, k));
}

std::string_view to_string(Threshold::Kind k) noexcept {
    return k == Threshold::Kind::Finite ? "FINITE" : "ALWAYS_NONOVERLAP";
}

std::string_view to_string(LBound::Kind k) noexcept {
    switch (k) {
        case LBound::Kind::Finite: return "FINITE";
        case LBound::Kind::AlwaysNonoverlap: return "ALWAYS_NONOVERLAP";
        case LBound::Kind::NoValidL: return "NO_VALID_L";
    }
    return "FINITE";
}

namespace {

void require_positive(const Length& v, const char* field) {
    if (!v.is_positive()) throw InvalidScenario(field, std::string(field) + " must be > 0 (got " + format_exact(v) + ")");
}

void require_nonnegative(const Length& v, const char* field) {
    if (v.is_negative()) throw InvalidScenario(field, std::string(field) + " must be >= 0 (got " + format_exact(v) + ")");
}

}  // namespace

Threshold nonoverlap_threshold(const Length& r_A, const Length& r_B, const Length& d, const Length& E) {
    require_positive(r_A, "rA");
    require_positive(r_B, "rB");
    require_positive(d, "d");
    require_nonnegative(E, "E");
    const auto S = r_A + r_B;
    // ab = d + dE/(r+L) > d >= S for every finite r+L.
    if (S <= d) return Threshold{Threshold::Kind::AlwaysNonoverlap, std::nullopt};
    return Threshold{Threshold::Kind::Finite, d * (E / (S - d))};
}

Threshold nonoverlap_threshold_from_trunk(const Length& r, const Length& r_A, const Length& r_B, const Length& d,
                                          const Length& E) {
    require_nonnegative(r, "r");
    require_positive(r_A, "rA");
    require_positive(r_B, "rB");
    require_positive(d, "d");
    require_nonnegative(E, "E");
    const auto S = r_A + r_B;
    return Threshold{Threshold::Kind::Finite, d * ((r + E) / S)};
}

LBound max_L_for_nonoverlap(const Length& r, const Length& r_A, const Length& r_B, const Length& d, const Length& E,
                            Convention convention) {
    require_nonnegative(r, "r");
    LBound out;
    out.reach_threshold = convention == Convention::FromDropPoint
                              ? nonoverlap_threshold(r_A, r_B, d, E)
                              : nonoverlap_threshold_from_trunk(r, r_A, r_B, d, E);
    if (out.reach_threshold.kind == Threshold::Kind::AlwaysNonoverlap) {
        out.kind = LBound::Kind::AlwaysNonoverlap;
        return out;
    }
    const auto bound = *out.reach_threshold.bound - r;
    if (!bound.is_positive()) {
        out.kind = LBound::Kind::NoValidL;
        return out;
    }
    out.kind = LBound::Kind::Finite;
    out.bound = bound;
    return out;
}

// Sweeps ---------------------------------------------------------------------

std::string_view to_string(SweepParam p) noexcept {
    switch (p) {
        case SweepParam::r: return "r";
        case SweepParam::L: return "L";
        case SweepParam::r_A: return "rA";
        case SweepParam::r_B: return "rB";
        case SweepParam::E: return "E";
    }
    return "r";
}

SweepParam parse_sweep_param(std::string_view text) {
    if (text == "r") return SweepParam::r;
    if (text == "L") return SweepParam::L;
    if (text == "rA" || text == "r_A") return SweepParam::r_A;
    if (text == "rB" || text == "r_B") return SweepParam::r_B;
    if (text == "E") return SweepParam::E;
    throw SweepError("unknown sweep parameter '" + std::string(text) + "' (expected r, L, rA, rB or E)");
}

std::int64_t SweepAxis::sample_count() const {
    if (!step.is_positive()) throw SweepError("sweep axis " + std::string(to_string(param)) + ": step must be > 0");
    if (stop < start) throw SweepError("sweep axis " + std::string(to_string(param)) + ": start must be <= stop");
    return ((stop - start) / step).floor() + 1;
}

namespace {

Length& field_of(Scenario& s, SweepParam p) {
    switch (p) {
        case SweepParam::r: return s.r;
        case SweepParam::L: return s.L;
        case SweepParam::r_A: return s.r_A;
        case SweepParam::r_B: return s.r_B;
        case SweepParam::E: return s.E;
    }
    return s.r;
}

}  // namespace

SweepTable sweep(const Scenario& base, const std::vector<SweepAxis>& axes) {
    if (axes.empty() || axes.size() > 2) throw SweepError("sweep needs 1 or 2 axes");
    if (axes.size() == 2 && axes[0].param == axes[1].param) throw SweepError("sweep axes must vary different parameters");

    std::vector<std::int64_t> counts;
    std::int64_t total = 1;
    for (const auto& axis : axes) {
        counts.push_back(axis.sample_count());
        if (counts.back() > kMaxSweepRows || total * counts.back() > kMaxSweepRows) {
            throw SweepError("sweep would produce more than 1000000 rows");
        }
        total *= counts.back();
    }

    SweepTable table;
    table.base = base;
    table.axes = axes;
    table.rows.reserve(static_cast<std::size_t>(total));
    std::vector<std::int64_t> idx(axes.size(), 0);
    for (std::int64_t n = 0; n < total; ++n) {
        // Row-major decode: the last axis varies fastest.
        std::int64_t rem = n;
        for (std::size_t k = axes.size(); k-- > 0;) {
            idx[k] = rem % counts[k];
            rem /= counts[k];
        }

        SweepRow row;
        Scenario s = base;
        try {
            for (std::size_t k = 0; k < axes.size(); ++k) {
                const auto value = axes[k].start + axes[k].step * Rational(idx[k]);
                row.values.push_back(value);
                field_of(s, axes[k].param) = value;
            }
            row.report = overlap_report(s);
        } catch (const InvalidScenario& e) {
            row.error = e.what();
        } catch (const std::overflow_error& e) {
            row.error = e.what();
        } catch (const std::domain_error& e) {
            row.error = e.what();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace goldbug
