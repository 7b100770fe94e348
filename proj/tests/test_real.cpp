#include <doctest.h>

#include <random>

#include "mproots/real.hpp"

using namespace mproots;

TEST_CASE("precision context enforces the digit floor") {
    CHECK_THROWS_AS(PrecisionContext(49), std::invalid_argument);
    CHECK_THROWS_AS(PrecisionContext(0), std::invalid_argument);
    CHECK(PrecisionContext(50).digits == 50);
    CHECK(PrecisionContext().digits == 2048);
}

TEST_CASE("parse_real accepts decimal literals") {
    PrecisionContext ctx(100);
    Real r = parse_real("1.5", ctx);
    CHECK(r.to_string() == "1.5");
    CHECK(r == Real::from_double(1.5, ctx));

    CHECK(parse_real("-0.25", ctx).to_string() == "-2.5e-1");
    CHECK(parse_real("+3", ctx) == Real::from_long(3, ctx));
    CHECK(parse_real("1e3", ctx) == Real::from_long(1000, ctx));
}

TEST_CASE("parse_real preserves extreme exponents") {
    PrecisionContext ctx(2048);
    Real tiny = parse_real("2.35e-1143", ctx);
    CHECK(tiny.to_sci(3) == "2.35e-1143");
    CHECK(tiny > Real::from_long(0, ctx));
    CHECK(tiny.log10_abs() == doctest::Approx(-1142.628).epsilon(1e-4));
}

TEST_CASE("parse_real rejects malformed input") {
    PrecisionContext ctx(100);
    CHECK_THROWS_AS(parse_real("abc", ctx), MalformedLiteral);
    CHECK_THROWS_AS(parse_real("", ctx), MalformedLiteral);
    CHECK_THROWS_AS(parse_real("1.5x", ctx), MalformedLiteral);
    CHECK_THROWS_AS(parse_real("1e", ctx), MalformedLiteral);
    CHECK_THROWS_AS(parse_real(".", ctx), MalformedLiteral);
    CHECK_THROWS_AS(parse_real("inf", ctx), MalformedLiteral);
    CHECK_THROWS_AS(parse_real("nan", ctx), MalformedLiteral);
    // exponents beyond the representable range must not round silently
    CHECK_THROWS_AS(parse_real("1e99999999999999999999", ctx), MalformedLiteral);
}

TEST_CASE("serialize then parse is the identity at fixed precision") {
    PrecisionContext ctx(300);
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> mant(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        Real x = Real::from_double(mant(rng), ctx);
        // stir in decimal-unfriendly structure
        x = x / 7 + sqrt(abs(x) + 1);
        Real back = parse_real(x.to_string(), ctx);
        CHECK(back == x);
    }
    Real z = Real::from_long(0, ctx);
    CHECK(parse_real(z.to_string(), ctx) == z);
    Real neg = parse_real("-4.25e-200", ctx);
    CHECK(parse_real(neg.to_string(), ctx) == neg);
}

TEST_CASE("approx_eq semantics") {
    PrecisionContext ctx(300);
    Real one = Real::from_long(1, ctx);
    Real near = one + pow10(-200, ctx);
    CHECK(approx_eq(one, near, 100));
    CHECK(approx_eq(near, one, 100));

    CHECK_FALSE(approx_eq(one, Real::from_long(2, ctx), 1));
    CHECK(approx_eq(Real::from_long(1000000, ctx), Real::from_long(1000001, ctx), 5));
}

TEST_CASE("exp(ln(x)) round trip holds to 295 digits at 300") {
    PrecisionContext ctx(300);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pos(1e-6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        Real x = Real::from_double(pos(rng), ctx);
        CHECK(approx_eq(exp(ln(x)), x, 295));
    }
}

TEST_CASE("sin^2 + cos^2 = 1 to precision - 5 digits") {
    PrecisionContext ctx(300);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dom(-10.0, 10.0);
    Real one = Real::from_long(1, ctx);
    for (int i = 0; i < 500; ++i) {
        Real x = Real::from_double(dom(rng), ctx);
        Real s = sin(x), c = cos(x);
        CHECK(approx_eq(s * s + c * c, one, ctx.digits - 5));
    }
}

TEST_CASE("arithmetic stays at the operand precision") {
    PrecisionContext lo(100), hi(400);
    Real a = parse_real("1.25", lo);
    Real b = parse_real("2.5", hi);
    CHECK((a + b).digits() == 400);
    CHECK((a * a).digits() == 100);
    CHECK((-a).digits() == 100);
    CHECK(a.round_to(60).digits() == 60);
}

TEST_CASE("general power") {
    PrecisionContext ctx(200);
    Real two = Real::from_long(2, ctx);
    CHECK(approx_eq(pow(two, parse_real("0.5", ctx)), sqrt(two), 195));
    CHECK(pow_int(two, 10) == Real::from_long(1024, ctx));
    CHECK(approx_eq(pow_int(two, -2), parse_real("0.25", ctx), 195));
}

TEST_CASE("scientific rendering") {
    PrecisionContext ctx(100);
    CHECK(parse_real("6.38125e-247", ctx).to_sci(3) == "6.38e-247");
    CHECK(parse_real("0.5", ctx).to_sci(3) == "5.00e-1");
    CHECK(parse_real("-1234", ctx).to_sci(2) == "-1.2e+3");
    CHECK(parse_real("9.99", ctx).to_sci(2) == "1.0e+1");
    CHECK(Real::from_long(0, ctx).to_sci(3) == "0");
}
