#include "hyperflow/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using hyperflow::Rational;

TEST_CASE("rationals are canonical") {
    CHECK(Rational(3, 6).str() == "1/2");
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-12, 8).str() == "-3/2");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-7/4").str() == "-7/4");
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational::parse("0") == Rational());

    CHECK_THROWS_AS(Rational::parse("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("--1"), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    const Rational half(1, 2);
    const Rational third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(-half == Rational(-1, 2));
    CHECK((half + (-half)).is_zero());
    CHECK_THROWS_AS(half / Rational(), std::domain_error);

    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(-2, 3).pow(0) == Rational(1));
    CHECK(Rational(-5, 4).abs() == Rational(5, 4));
    CHECK(Rational(1, 4).to_double() == doctest::Approx(0.25));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(3, 2));
}
