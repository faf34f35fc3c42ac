#include <doctest.h>

#include <stdexcept>

#include "isolation/rational.hpp"

using isolation::Rational;

TEST_CASE("normalization") {
    CHECK(Rational(4, 2) == Rational(2));
    CHECK(Rational(-4, -2) == Rational(2));
    CHECK(Rational(1, -3) == Rational(-1, 3));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(3, 7).num() == 3);
    CHECK(Rational(3, 7).den() == 7);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic and ordering") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(-Rational(5, 4) == Rational(-5, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 7) <= Rational(1));
    CHECK(Rational(5, 2).to_double() == doctest::Approx(2.5));
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(5, 2).is_integer());
}

TEST_CASE("printing") {
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(-9, 6).str() == "-3/2");
}
