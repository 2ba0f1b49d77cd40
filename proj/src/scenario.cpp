#include "goldbug/scenario.hpp"

#include <algorithm>
#include <cmath>

namespace goldbug {

std::string_view to_string(Convention c) noexcept {
    switch (c) {
        case Convention::FromDropPoint: return "from-drop-point";
        case Convention::FromTrunk: return "from-trunk";
    }
    return "from-drop-point";
}

Convention parse_convention(std::string_view text) {
    if (text == "from-drop-point" || text == "from_drop_point" || text == "FROM_DROP_POINT") {
        return Convention::FromDropPoint;
    }
    if (text == "from-trunk" || text == "from_trunk" || text == "FROM_TRUNK") return Convention::FromTrunk;
    throw InvalidScenario("convention", "unknown convention '" + std::string(text) +
                                            "' (expected from-drop-point or from-trunk)");
}

void validate(const Scenario& s) {
    auto require = [](bool ok, const char* field, const char* rule, const Length& v) {
        if (!ok) {
            throw InvalidScenario(field, std::string(field) + " must be " + rule + " (got " + format_exact(v) + ")");
        }
    };
    require(!s.r.is_negative(), "r", ">= 0", s.r);
    require(s.L.is_positive(), "L", "> 0", s.L);
    require(s.d.is_positive(), "d", "> 0", s.d);
    require(!s.E.is_negative(), "E", ">= 0", s.E);
    require(s.r_A.is_positive(), "rA", "> 0", s.r_A);
    require(s.r_B.is_positive(), "rB", "> 0", s.r_B);
    const auto reach = s.r + s.L;
    if (s.d / Rational(2) > reach) {
        throw InvalidScenario("d", "d/2 must not exceed r+L (got d = " + format_exact(s.d) +
                                       ", r+L = " + format_exact(reach) + ")");
    }
    if (s.convention == Convention::FromTrunk && !(s.r + s.E).is_positive()) {
        throw InvalidScenario("E", "r+E must be > 0 when measuring from the trunk");
    }
}

double distance(const Point& p, const Point& q) noexcept { return std::hypot(p.x - q.x, p.y - q.y); }

Rational half_angle_sin(const Scenario& s) {
    const auto reach = s.r + s.L;
    if (reach.is_zero()) throw std::domain_error("half_angle_sin: r+L is zero");
    return (s.d / Rational(2)) / reach;
}

Length dig_center_radius(const Scenario& s) {
    return s.convention == Convention::FromDropPoint ? s.r + s.L + s.E : s.r + s.E;
}

Length center_distance(const Scenario& s) {
    // Similar triangles: AB / ab = D / (r+L), with ab = d.
    return s.d * (dig_center_radius(s) / (s.r + s.L));
}

Layout layout(const Scenario& s) {
    Layout out;
    out.sin_theta = half_angle_sin(s);
    const double sin_t = out.sin_theta.to_double();
    const double cos_t = std::sqrt(std::max(0.0, 1.0 - sin_t * sin_t));
    out.theta_radians = std::asin(sin_t);

    const double reach = to_real_feet(s.r + s.L);
    const double half_d = to_real_feet(s.d / Rational(2));
    out.O = {0.0, 0.0};
    out.a = {reach * cos_t, half_d};
    out.b = {reach * cos_t, -half_d};

    const Rational scale_exact = dig_center_radius(s) / (s.r + s.L);
    if (scale_exact == Rational(1)) {
        out.A = out.a;
        out.B = out.b;
    } else {
        const double scale = scale_exact.to_double();
        out.A = {out.a.x * scale, out.a.y * scale};
        out.B = {out.b.x * scale, out.b.y * scale};
    }
    return out;
}

}  // namespace goldbug
