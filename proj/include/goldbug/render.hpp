#pragma once

// SVG plan view of the dig site.

#include "goldbug/scenario.hpp"

#include <stdexcept>
#include <string>

namespace goldbug {

struct CanvasSpec {
    int width_px = 800;
    int height_px = 400;
    int margin_px = 20;
    double feet_per_px = 0.1;
    bool show_labels = true;
    // Display-only multiplier on theta. 1 draws to scale; anything else is
    // announced in the document title.
    double angle_exaggeration = 1.0;
};

// Scene does not fit the canvas. required_* give the smallest canvas that would.
class CanvasTooSmall : public std::runtime_error {
public:
    CanvasTooSmall(int required_width, int required_height, const std::string& message)
        : std::runtime_error(message), required_width_(required_width), required_height_(required_height) {}
    [[nodiscard]] int required_width() const noexcept { return required_width_; }
    [[nodiscard]] int required_height() const noexcept { return required_height_; }

private:
    int required_width_;
    int required_height_;
};

// Elements, in order: title, trunk circle, drop point markers a and b, rays
// O->A and O->B, hole circles A and B, the shaded lens (only when the holes
// overlap), then the labels O, a, b, A, B, 2θ (only with show_labels).
// All coordinates are pixels with exactly four decimals, so the output is
// byte-identical for identical input.
//
// Throws std::invalid_argument for a bad CanvasSpec, InvalidScenario for a
// bad Scenario and CanvasTooSmall when the drawing does not fit.
std::string render_svg(const Scenario& s, const CanvasSpec& c);

}  // namespace goldbug
