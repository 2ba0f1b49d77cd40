#include "goldbug/units.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

using namespace goldbug;

namespace {

Length in(std::int64_t n, std::int64_t d = 1) { return Length::inches(Rational(n, d)); }

// Digits of n/d by schoolbook long division, no floating point involved.
std::string long_division(std::int64_t n, std::int64_t d, int digits) {
    std::string out = std::to_string(n / d) + ".";
    std::int64_t rem = n % d;
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + rem / d);
        rem %= d;
    }
    return out;
}

}  // namespace

TEST_CASE("parse_length: documented examples") {
    CHECK(parse_length("2.5in") == in(5, 2));
    CHECK(parse_length("2.5in").in_feet() == Rational(5, 24));
    CHECK(parse_length("0in") == in(0));
    CHECK(parse_length("0in").in_inches().den() == 1);
    CHECK(parse_length("2'9\"") == in(33));
    CHECK(parse_length("50ft") == in(600));
}

TEST_CASE("parse_length: accepted variants") {
    CHECK(parse_length("5/2in") == parse_length("2.5in"));
    CHECK(parse_length("250/91ft") == in(3000, 91));
    CHECK(parse_length("  3 ft ") == in(36));
    CHECK(parse_length("-1.5ft") == in(-18));
    CHECK(parse_length("+4in") == in(4));
    CHECK(parse_length("2' 9.5\"") == in(67, 2));
    CHECK(parse_length("0.000001in") == in(1, 1000000));
    CHECK(parse_length("- 5/2 in") == in(-5, 2));
}

TEST_CASE("parse_length: errors name the offending token") {
    auto token_of = [](const char* text) {
        try {
            (void)parse_length(text);
        } catch (const ParseError& e) {
            return e.token();
        }
        return std::string("<no error>");
    };
    CHECK(token_of("2.5yd") == "yd");
    CHECK(token_of("abc") == "abc");
    CHECK(token_of("2.5") == "<end of input>");
    CHECK(token_of("1/0in") == "in");
    CHECK(token_of("3ft extra") == "extra");
    CHECK(token_of("2'9") == "<end of input>");

    CHECK_THROWS_AS(parse_length("0.1234567in"), ParseError);
    CHECK_THROWS_AS(parse_length("1/2'3\""), ParseError);
    CHECK_THROWS_AS(parse_length("1.5/2in"), ParseError);
    CHECK_THROWS_AS(parse_length(""), ParseError);
    CHECK_THROWS_AS(parse_length("99999999999999999999in"), ParseError);
}

TEST_CASE("to_real_feet") {
    CHECK(to_real_feet(in(5, 2)) == 5.0 / 24.0);
    CHECK(to_real_feet(in(600)) == 50.0);
    // 250/91 ft: compare against long division digits and the correctly rounded quotient.
    const double v = to_real_feet(in(3000, 91));
    CHECK(v == 250.0 / 91.0);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    CHECK(std::string(buf).substr(0, 13) == long_division(250, 91, 11));
}

TEST_CASE("format_feet_inches") {
    CHECK(format_feet_inches(in(3000, 91), true) == "2'9\"");
    CHECK(format_feet_inches(in(0), true) == "0'0\"");
    CHECK(format_feet_inches(in(3000, 91) - in(2), true) == "2'7\"");
    CHECK(format_feet_inches(in(23, 2), true) == "1'0\"");   // 11.5 ties up to 12, carried
    CHECK(format_feet_inches(in(143, 2), true) == "6'0\"");  // 71.5 -> 72
    CHECK(format_feet_inches(in(3000, 91), false) == "3000/91in");
    CHECK_THROWS_AS(format_feet_inches(in(-1), true), std::domain_error);
    CHECK_THROWS_AS(format_feet_inches(in(-1), false), std::domain_error);
}

TEST_CASE("Length arithmetic and ordering") {
    CHECK(Length::feet(Rational(5, 24)) + Length::feet(50) == Length::feet(Rational(1205, 24)));
    CHECK(Length::feet(Rational(250, 91)) < Length::feet(Rational(11, 4)));
    CHECK((in(33) - in(33)).is_zero());
    CHECK(in(30, 12) == in(5, 2));
    CHECK(Length::feet(3) / Length::inches(6) == Rational(6));
    CHECK_THROWS_AS(in(1) / Rational(0), std::domain_error);
}

TEST_CASE("property: exact formatting round-trips and to_real_feet is within one ulp") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 5000; ++i) {
        const auto n = static_cast<std::int64_t>(rng() % 2'000'001) - 1'000'000;
        const auto d = static_cast<std::int64_t>(rng() % 100'000) + 1;
        const auto x = in(n, d);
        REQUIRE(parse_length(format_exact(x)) == x);
        if (!x.is_negative()) REQUIRE(parse_length(format_feet_inches(x, false)) == x);

        const double got = to_real_feet(x);
        const long double ref = static_cast<long double>(n) / (12.0L * static_cast<long double>(d));
        const double ulp = std::nextafter(std::abs(got), INFINITY) - std::abs(got);
        REQUIRE(std::abs(static_cast<long double>(got) - ref) < static_cast<long double>(ulp));
    }
}
