#include "goldbug/units.hpp"

#include <cctype>

namespace goldbug {

namespace {

constexpr int kMaxFractionDigits = 6;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }
    [[nodiscard]] bool done() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return done() ? '\0' : text_[pos_]; }
    [[nodiscard]] std::string_view rest() const { return text_.substr(pos_); }
    void advance(std::size_t n = 1) { pos_ += n; }

    bool consume(std::string_view token) {
        if (rest().substr(0, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    // Next whitespace-delimited chunk, for error messages.
    [[nodiscard]] std::string token_here() const {
        auto r = rest();
        std::size_t n = 0;
        while (n < r.size() && !is_space(r[n])) ++n;
        return n == 0 ? std::string("<end of input>") : std::string(r.substr(0, n));
    }

    [[noreturn]] void fail(const std::string& what) const {
        const auto tok = token_here();
        throw ParseError("invalid length '" + std::string(text_) + "': " + what + " at '" + tok + "'", tok);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::int64_t read_digits(Cursor& cur, std::size_t* count) {
    std::int64_t value = 0;
    std::size_t n = 0;
    while (is_digit(cur.peek())) {
        try {
            value = detail::checked_add(detail::checked_mul(value, 10), cur.peek() - '0');
        } catch (const std::overflow_error&) {
            cur.fail("number too large");
        }
        cur.advance();
        ++n;
    }
    *count = n;
    return value;
}

// <digits>[.<digits>] converted exactly.
Rational read_decimal(Cursor& cur) {
    std::size_t n_int = 0;
    const auto whole = read_digits(cur, &n_int);
    if (n_int == 0) cur.fail("expected a number");
    Rational value(whole);
    if (cur.peek() == '.') {
        cur.advance();
        std::size_t n_frac = 0;
        const auto frac = read_digits(cur, &n_frac);
        if (n_frac == 0) cur.fail("expected digits after decimal point");
        if (n_frac > static_cast<std::size_t>(kMaxFractionDigits)) cur.fail("more than 6 fractional digits");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < n_frac; ++i) scale *= 10;
        value += Rational(frac, scale);
    }
    return value;
}

// <digits>/<digits> or a decimal.
Rational read_quantity(Cursor& cur) {
    const auto value = read_decimal(cur);
    if (cur.peek() != '/') return value;
    if (!value.is_integer()) cur.fail("fraction numerator must be an integer");
    cur.advance();
    std::size_t n_den = 0;
    const auto den = read_digits(cur, &n_den);
    if (n_den == 0) cur.fail("expected fraction denominator");
    if (den == 0) cur.fail("zero denominator");
    if (cur.peek() == '.') cur.fail("fraction denominator must be an integer");
    return value / Rational(den);
}

}  // namespace

Length parse_length(std::string_view text) {
    Cursor cur(text);
    cur.skip_space();
    bool negative = false;
    if (cur.peek() == '+' || cur.peek() == '-') {
        negative = cur.peek() == '-';
        cur.advance();
        cur.skip_space();
    }

    const bool is_fraction_form = [&] {
        auto r = cur.rest();
        std::size_t i = 0;
        while (i < r.size() && (is_digit(r[i]) || r[i] == '.')) ++i;
        return i < r.size() && r[i] == '/';
    }();

    const auto quantity = read_quantity(cur);
    cur.skip_space();

    Rational inches;
    if (cur.consume("ft")) {
        inches = quantity * Rational(12);
    } else if (cur.consume("in")) {
        inches = quantity;
    } else if (cur.consume("'")) {
        if (is_fraction_form) cur.fail("feet-inches form takes decimals, not fractions");
        cur.skip_space();
        const auto extra = read_decimal(cur);
        cur.skip_space();
        if (!cur.consume("\"")) cur.fail("expected '\"' after inches");
        inches = quantity * Rational(12) + extra;
    } else {
        cur.fail(cur.done() ? "missing unit (ft, in, or ')" : "unknown unit");
    }

    cur.skip_space();
    if (!cur.done()) cur.fail("unexpected trailing text");
    return Length::inches(negative ? -inches : inches);
}

double to_real_feet(const Length& x) noexcept {
    const auto& v = x.in_inches();
    // Correctly rounded when 12*den still fits exactly; otherwise extended precision.
    constexpr std::int64_t exact = std::int64_t{1} << 53;
    if (v.num() > -exact && v.num() < exact && v.den() < exact / 12) {
        return static_cast<double>(v.num()) / static_cast<double>(12 * v.den());
    }
    return static_cast<double>(static_cast<long double>(v.num()) /
                               (12.0L * static_cast<long double>(v.den())));
}

std::string format_feet_inches(const Length& x, bool round_to_inch) {
    if (x.is_negative()) throw std::domain_error("format_feet_inches: negative length " + format_exact(x));
    if (!round_to_inch) return format_exact(x);
    const auto total = x.in_inches().round_half_up();
    return std::to_string(total / 12) + "'" + std::to_string(total % 12) + "\"";
}

std::string format_exact(const Length& x) { return x.in_inches().str() + "in"; }

}  // namespace goldbug
