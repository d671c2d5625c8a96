#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "slcone/rational.hpp"

using slcone::ArithmeticOverflow;
using slcone::checked_add;
using slcone::checked_mul;
using slcone::ConfigError;
using slcone::Rational;

TEST_CASE("rationals normalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(1, -2).num() == -1);
    CHECK(Rational(1, -2).den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), ConfigError);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(3, 2) == Rational(2));
    CHECK(Rational(1, 2) - Rational(3, 2) == Rational(-1));
    CHECK(Rational(-1, 2) * Rational(3, 2) == Rational(-3, 4));
    CHECK(-Rational(5, 3) == Rational(-5, 3));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 7) == Rational(1));
    CHECK(Rational(9, 4) > Rational(2));
    CHECK(!(Rational(9, 4) > Rational(9, 4)));
}

TEST_CASE("ceil") {
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).ceil() == 4);
    CHECK(Rational(0).ceil() == 0);
}

TEST_CASE("parse accepts p and p/q only") {
    CHECK(Rational::parse("9/4") == Rational(9, 4));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("+2") == Rational(2));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("1.5"), ConfigError);
    CHECK_THROWS_AS(Rational::parse(""), ConfigError);
    CHECK_THROWS_AS(Rational::parse("3/-2"), ConfigError);
    CHECK_THROWS_AS(Rational::parse("3/0"), ConfigError);
    CHECK_THROWS_AS(Rational::parse("abc"), ConfigError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ConfigError);
}

TEST_CASE("to_string round-trips through parse") {
    for (const auto& r : {Rational(0), Rational(-5), Rational(9, 4), Rational(-7, 3)})
        CHECK(Rational::parse(r.to_string()) == r);
    CHECK(Rational(9, 4).to_string() == "9/4");
    CHECK(Rational(8, 4).to_string() == "2");
}

TEST_CASE("overflow throws instead of wrapping") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(checked_add(big, 1), ArithmeticOverflow);
    CHECK_THROWS_AS(checked_mul(big, 2), ArithmeticOverflow);
    CHECK_THROWS_AS(Rational(big) + Rational(1), ArithmeticOverflow);
    CHECK_THROWS_AS(Rational(big, 2) * Rational(3), ArithmeticOverflow);
}

TEST_CASE("exact comparison agrees with floating point away from ties") {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<std::int64_t> num(-500, 500);
    std::uniform_int_distribution<std::int64_t> den(1, 60);
    for (int trial = 0; trial < 20000; ++trial) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        const double fa = a.to_double();
        const double fb = b.to_double();
        if (std::abs(fa - fb) <= 1e-9)
            continue; // exact logic is authoritative at boundaries
        CHECK((a < b) == (fa < fb));
    }
}
