#pragma once

// Exact imperial lengths.
//
// A Length is stored as an exact rational number of inches. Feet values and
// inch values from the dig directions (50 ft, 2.5 in) are therefore both
// exact, and thresholds such as 250/91 ft never get rounded.

#include "goldbug/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace goldbug {

class Length {
public:
    constexpr Length() = default;

    static Length inches(const Rational& value) { return Length(value); }
    static Length feet(const Rational& value) { return Length(value * Rational(12)); }

    [[nodiscard]] const Rational& in_inches() const noexcept { return inches_; }
    [[nodiscard]] Rational in_feet() const { return inches_ / Rational(12); }

    [[nodiscard]] bool is_zero() const noexcept { return inches_.is_zero(); }
    [[nodiscard]] bool is_negative() const noexcept { return inches_.is_negative(); }
    [[nodiscard]] bool is_positive() const noexcept { return inches_.is_positive(); }

    Length operator-() const { return Length(-inches_); }
    friend Length operator+(const Length& a, const Length& b) { return Length(a.inches_ + b.inches_); }
    friend Length operator-(const Length& a, const Length& b) { return Length(a.inches_ - b.inches_); }
    friend Length operator*(const Length& a, const Rational& k) { return Length(a.inches_ * k); }
    friend Length operator*(const Rational& k, const Length& a) { return Length(a.inches_ * k); }
    friend Length operator/(const Length& a, const Rational& k) { return Length(a.inches_ / k); }
    // Dimensionless ratio.
    friend Rational operator/(const Length& a, const Length& b) { return a.inches_ / b.inches_; }

    Length& operator+=(const Length& o) { return *this = *this + o; }
    Length& operator-=(const Length& o) { return *this = *this - o; }

    friend bool operator==(const Length&, const Length&) = default;
    friend std::strong_ordering operator<=>(const Length& a, const Length& b) noexcept {
        return a.inches_ <=> b.inches_;
    }

private:
    explicit Length(Rational inches) : inches_(inches) {}

    Rational inches_;
};

// Thrown by parse_length; token() is the offending piece of input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::string token)
        : std::invalid_argument(message), token_(std::move(token)) {}
    [[nodiscard]] const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

// Accepted forms (optional leading sign, whitespace around unit tokens):
//   <q>ft  <q>in        decimal with at most 6 fractional digits
//   <a>/<b>ft  <a>/<b>in
//   <f>'<f>"            feet and inches, e.g. 2'9" or 2' 9.5"
Length parse_length(std::string_view text);

// numerator / (12 * denominator) as the nearest double.
double to_real_feet(const Length& x) noexcept;

// round_to_inch: F'I" with the nearest whole inch (ties up, 12" carried).
// Otherwise the exact inch value, e.g. 3000/91in, which parse_length reads back.
// Throws std::domain_error for negative lengths.
std::string format_feet_inches(const Length& x, bool round_to_inch);

// Exact inch rendering for any sign ("-5/2in"); parse_length round-trips it.
std::string format_exact(const Length& x);

}  // namespace goldbug
