#include "goldbug/rational.hpp"

#include <cmath>
#include <limits>

namespace goldbug {

__extension__ typedef __int128 i128;

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("rational: integer overflow in addition");
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("rational: integer overflow in subtraction");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("rational: integer overflow in multiplication");
    return out;
}

namespace {

std::int64_t abs_checked(std::int64_t v) {
    if (v == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("rational: integer overflow in negation");
    return v < 0 ? -v : v;
}

}  // namespace
}  // namespace detail

void Rational::normalize() {
    if (den_ == 0) throw std::domain_error("rational: zero denominator");
    if (den_ < 0) {
        num_ = detail::checked_sub(0, num_);
        den_ = detail::checked_sub(0, den_);
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    const auto g = std::gcd(detail::abs_checked(num_), den_);
    num_ /= g;
    den_ /= g;
}

double Rational::to_double() const noexcept {
    // Both magnitudes exact in a double: a single IEEE division is correctly rounded.
    constexpr std::int64_t exact = std::int64_t{1} << 53;
    if (num_ > -exact && num_ < exact && den_ < exact) {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) throw std::invalid_argument("rational: negative digit count");
    // Scale by 10^digits in 128-bit, round half away from zero, then split.
    i128 scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
        if (scale > (static_cast<i128>(1) << 62)) throw std::overflow_error("rational: too many decimal digits");
    }
    const bool neg = num_ < 0;
    const i128 mag = neg ? -static_cast<i128>(num_) : static_cast<i128>(num_);
    const i128 scaled = mag * scale;
    i128 q = scaled / den_;
    const i128 rem = scaled % den_;
    if (2 * rem >= den_) ++q;

    const i128 int_part = q / scale;
    i128 frac_part = q % scale;

    auto to_str = [](i128 v) {
        if (v == 0) return std::string("0");
        std::string s;
        while (v > 0) {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
            v /= 10;
        }
        return s;
    };

    std::string out = (neg && q != 0) ? "-" : "";
    out += to_str(int_part);
    if (digits > 0) {
        std::string frac(static_cast<std::size_t>(digits), '0');
        for (int i = digits - 1; i >= 0; --i) {
            frac[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac_part % 10));
            frac_part /= 10;
        }
        out += "." + frac;
    }
    return out;
}

Rational::int_type Rational::floor() const noexcept {
    int_type q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational::int_type Rational::round_half_up() const {
    return (*this + Rational(1, 2)).floor();
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
    if (num_ == 0) throw std::domain_error("rational: reciprocal of zero");
    return Rational(den_, num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = detail::checked_sub(0, num_);
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b/g * d)
    const auto g = std::gcd(a.den_, b.den_);
    const auto lhs = detail::checked_mul(a.num_, b.den_ / g);
    const auto rhs = detail::checked_mul(b.num_, a.den_ / g);
    return Rational(detail::checked_add(lhs, rhs), detail::checked_mul(a.den_ / g, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    // Cross-reduce first so intermediate products stay as small as possible.
    const auto g1 = std::gcd(detail::abs_checked(a.num_), b.den_);
    const auto g2 = std::gcd(detail::abs_checked(b.num_), a.den_);
    return Rational(detail::checked_mul(a.num_ / g1, b.num_ / g2), detail::checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational: division by zero");
    return a * b.reciprocal();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace goldbug
