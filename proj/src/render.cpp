#include "goldbug/render.hpp"

#include "goldbug/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace goldbug {

namespace {

// Fixed four decimals, never scientific; -0.0000 is written as 0.0000.
std::string num(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 4);
    std::string s(buf, res.ptr);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

struct PixelFrame {
    double x_min_ft;
    double feet_per_px;
    double margin;
    double mid_y;

    [[nodiscard]] Point to_px(const Point& p) const {
        return {margin + (p.x - x_min_ft) / feet_per_px, mid_y - p.y / feet_per_px};
    }
    [[nodiscard]] double len(double feet) const { return feet / feet_per_px; }
};

void validate_canvas(const CanvasSpec& c) {
    if (c.width_px <= 0 || c.height_px <= 0) throw std::invalid_argument("canvas: width and height must be > 0");
    if (c.margin_px < 0) throw std::invalid_argument("canvas: margin must be >= 0");
    if (!(c.feet_per_px > 0.0) || !std::isfinite(c.feet_per_px)) {
        throw std::invalid_argument("canvas: feet per pixel must be > 0");
    }
    if (!(c.angle_exaggeration > 0.0) || !std::isfinite(c.angle_exaggeration)) {
        throw std::invalid_argument("canvas: angle exaggeration must be > 0");
    }
}

// Closed path around the intersection of two circles given in pixels.
// Both arcs run with sweep flag 0 (decreasing angle in pixel space) and take
// the large arc when the common chord lies beyond that circle's center.
std::string lens_path(const Point& A, double rA, const Point& B, double rB) {
    const double ab = distance(A, B);
    std::ostringstream d;
    if (ab <= std::abs(rA - rB)) {
        // One hole inside the other: the lens is the smaller disk.
        const Point& c = rA <= rB ? A : B;
        const double r = std::min(rA, rB);
        d << "M " << num(c.x - r) << ' ' << num(c.y) << " A " << num(r) << ' ' << num(r) << " 0 1 0 " << num(c.x + r)
          << ' ' << num(c.y) << " A " << num(r) << ' ' << num(r) << " 0 1 0 " << num(c.x - r) << ' ' << num(c.y)
          << " Z";
        return d.str();
    }
    const Point u{(B.x - A.x) / ab, (B.y - A.y) / ab};
    const Point n{-u.y, u.x};
    const double along = (ab * ab + rA * rA - rB * rB) / (2.0 * ab);  // A to chord, signed
    const double h = std::sqrt(std::max(0.0, rA * rA - along * along));
    const Point m{A.x + along * u.x, A.y + along * u.y};
    const Point p1{m.x + h * n.x, m.y + h * n.y};
    const Point p2{m.x - h * n.x, m.y - h * n.y};
    const int large_a = along < 0.0 ? 1 : 0;
    const int large_b = (ab - along) < 0.0 ? 1 : 0;
    d << "M " << num(p1.x) << ' ' << num(p1.y) << " A " << num(rA) << ' ' << num(rA) << " 0 " << large_a << " 0 "
      << num(p2.x) << ' ' << num(p2.y) << " A " << num(rB) << ' ' << num(rB) << " 0 " << large_b << " 0 "
      << num(p1.x) << ' ' << num(p1.y) << " Z";
    return d.str();
}

void text(std::ostringstream& out, const Point& at, double dx, double dy, const char* label) {
    out << "<text x=\"" << num(at.x + dx) << "\" y=\"" << num(at.y + dy) << "\">" << label << "</text>\n";
}

}  // namespace

std::string render_svg(const Scenario& s, const CanvasSpec& c) {
    validate_canvas(c);
    const auto report = overlap_report(s);  // validates the scenario

    Layout lay = layout(s);
    const bool to_scale = c.angle_exaggeration == 1.0;
    if (!to_scale) {
        const double shown = std::min(lay.theta_radians * c.angle_exaggeration, std::numbers::pi / 2.0);
        const double reach = to_real_feet(s.r + s.L);
        const double D = to_real_feet(dig_center_radius(s));
        lay.a = {reach * std::cos(shown), reach * std::sin(shown)};
        lay.b = {lay.a.x, -lay.a.y};
        lay.A = {D * std::cos(shown), D * std::sin(shown)};
        lay.B = {lay.A.x, -lay.A.y};
    }

    const double r = to_real_feet(s.r);
    const double rA = to_real_feet(s.r_A);
    const double rB = to_real_feet(s.r_B);
    const double x_min = std::min({-r, lay.A.x - rA, lay.B.x - rB, lay.a.x});
    const double x_max = std::max({r, lay.A.x + rA, lay.B.x + rB, lay.a.x});
    const double y_ext = std::max({r, lay.A.y + rA, -lay.B.y + rB, lay.a.y});

    const auto need_w = static_cast<int>(std::ceil((x_max - x_min) / c.feet_per_px)) + 2 * c.margin_px;
    const auto need_h = static_cast<int>(std::ceil(2.0 * y_ext / c.feet_per_px)) + 2 * c.margin_px;
    if (need_w > c.width_px || need_h > c.height_px) {
        throw CanvasTooSmall(need_w, need_h,
                             "scene does not fit a " + std::to_string(c.width_px) + "x" + std::to_string(c.height_px) +
                                 " canvas; needs at least " + std::to_string(need_w) + "x" + std::to_string(need_h) +
                                 " px at " + num(c.feet_per_px) + " ft/px");
    }

    const PixelFrame frame{x_min, c.feet_per_px, static_cast<double>(c.margin_px), c.height_px / 2.0};
    const Point O = frame.to_px(lay.O);
    const Point a = frame.to_px(lay.a);
    const Point b = frame.to_px(lay.b);
    const Point A = frame.to_px(lay.A);
    const Point B = frame.to_px(lay.B);
    const double rA_px = frame.len(rA);
    const double rB_px = frame.len(rB);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << c.width_px << "\" height=\""
        << c.height_px << "\" viewBox=\"0 0 " << c.width_px << ' ' << c.height_px << "\">\n";
    out << "<title>Dig site plan view, " << num(c.feet_per_px) << " ft/px";
    if (!to_scale) out << ", angles exaggerated x" << num(c.angle_exaggeration) << " (not to scale)";
    out << "</title>\n";

    out << "<circle id=\"trunk\" cx=\"" << num(O.x) << "\" cy=\"" << num(O.y) << "\" r=\"" << num(frame.len(r))
        << "\" fill=\"#8b5a2b\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    for (const auto& [id, p] : {std::pair{"drop-a", a}, std::pair{"drop-b", b}}) {
        out << "<path id=\"" << id << "\" d=\"M " << num(p.x - 3) << ' ' << num(p.y) << " L " << num(p.x + 3) << ' '
            << num(p.y) << " M " << num(p.x) << ' ' << num(p.y - 3) << " L " << num(p.x) << ' ' << num(p.y + 3)
            << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    }
    for (const auto& [id, p] : {std::pair{"ray-A", A}, std::pair{"ray-B", B}}) {
        out << "<line id=\"" << id << "\" x1=\"" << num(O.x) << "\" y1=\"" << num(O.y) << "\" x2=\"" << num(p.x)
            << "\" y2=\"" << num(p.y) << "\" stroke=\"#555555\" stroke-width=\"0.5\" stroke-dasharray=\"4 2\"/>\n";
    }
    out << "<circle id=\"hole-A\" cx=\"" << num(A.x) << "\" cy=\"" << num(A.y) << "\" r=\"" << num(rA_px)
        << "\" fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"1\"/>\n";
    out << "<circle id=\"hole-B\" cx=\"" << num(B.x) << "\" cy=\"" << num(B.y) << "\" r=\"" << num(rB_px)
        << "\" fill=\"none\" stroke=\"#b03020\" stroke-width=\"1\"/>\n";
    if (report.overlaps && distance(A, B) < rA_px + rB_px) {
        out << "<path id=\"lens\" d=\"" << lens_path(A, rA_px, B, rB_px)
            << "\" fill=\"#d04040\" fill-opacity=\"0.4\" stroke=\"none\"/>\n";
    }
    if (c.show_labels) {
        text(out, O, -12, 4, "O");
        text(out, a, 4, -6, "a");
        text(out, b, 4, 14, "b");
        text(out, A, 4, -4, "A");
        text(out, B, 4, 14, "B");
        text(out, O, 10, 4, "2θ");
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace goldbug
