#pragma once

// Exact rational numbers over 64-bit integers.
//
// Values are always stored reduced with a positive denominator, so two
// rationals are equal iff their fields are equal. Every operation that could
// exceed int64 throws std::overflow_error instead of wrapping.

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace goldbug {

class Rational {
public:
    using int_type = std::int64_t;

    constexpr Rational() = default;
    constexpr Rational(int_type n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(int_type n, int_type d) : num_(n), den_(d) { normalize(); }

    [[nodiscard]] constexpr int_type num() const noexcept { return num_; }
    [[nodiscard]] constexpr int_type den() const noexcept { return den_; }

    [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] constexpr bool is_negative() const noexcept { return num_ < 0; }
    [[nodiscard]] constexpr bool is_positive() const noexcept { return num_ > 0; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }

    // Nearest double (ties to even).
    [[nodiscard]] double to_double() const noexcept;

    // "n/d", or "n" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    // Fixed-point decimal rendering computed by exact long division, rounded
    // half away from zero at the last digit. Platform independent.
    [[nodiscard]] std::string decimal(int digits) const;

    // Floor and rounding to an integer (ties toward +infinity).
    [[nodiscard]] int_type floor() const noexcept;
    [[nodiscard]] int_type round_half_up() const;

    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational reciprocal() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize();

    int_type num_ = 0;
    int_type den_ = 1;
};

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
}  // namespace detail

}  // namespace goldbug
