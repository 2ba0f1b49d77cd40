#pragma once

#include "goldbug/rational.hpp"
#include "goldbug/units.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace goldbug {

// Where the extension distance E is measured from.
enum class Convention {
    FromDropPoint,  // E runs outward from the drop points a and b
    FromTrunk,      // E runs outward from the trunk surface
};

std::string_view to_string(Convention c) noexcept;
// Accepts "from-drop-point" / "from-trunk" (also the underscore spellings).
Convention parse_convention(std::string_view text);

// Raised when a Scenario (or a request built on one) breaks an invariant.
// field() names the offending parameter.
class InvalidScenario : public std::invalid_argument {
public:
    InvalidScenario(std::string field, const std::string& message)
        : std::invalid_argument(message), field_(std::move(field)) {}
    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// One dig layout. Defaults are the canonical dig directions: drop points
// 2.5 in apart, 50 ft extension, 4 ft diameter holes.
struct Scenario {
    Length r;                                   // trunk radius at branch height
    Length L;                                   // eye socket distance from the trunk surface
    Length d = Length::inches(Rational(5, 2));  // drop point separation
    Length E = Length::feet(50);                // extension distance
    Length r_A = Length::feet(2);               // first hole radius
    Length r_B = Length::feet(2);               // second hole radius
    Convention convention = Convention::FromDropPoint;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Throws InvalidScenario on the first broken invariant:
// r >= 0, L > 0, d > 0, E >= 0, r_A > 0, r_B > 0, d/2 <= r+L, and r+E > 0
// under FromTrunk.
void validate(const Scenario& s);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double distance(const Point& p, const Point& q) noexcept;

// Plan view in feet. O is the tree center at the origin; the layout is
// mirror symmetric about the x axis with a, A above and b, B below.
struct Layout {
    Point O, a, b, A, B;
    Rational sin_theta;
    double theta_radians = 0.0;
};

// sin(theta) = (d/2)/(r+L), exact. Domain error when r+L = 0.
Rational half_angle_sin(const Scenario& s);

// Distance from O to each hole center: r+L+E or r+E depending on convention.
Length dig_center_radius(const Scenario& s);

// AB = 2 D sin(theta) = d D/(r+L), exact.
Length center_distance(const Scenario& s);

// Point coordinates via the trig construction.
Layout layout(const Scenario& s);

}  // namespace goldbug
