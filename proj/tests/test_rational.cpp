#include <doctest.h>

#include "frieze/rational.hpp"

using frieze::BigInt;
using frieze::DivisionByZero;
using frieze::Rational;

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(BigInt(0), BigInt(-7)).str() == "0");
}

TEST_CASE("parse accepts integers and fractions") {
    CHECK(Rational::parse("7/2") == Rational(BigInt(7), BigInt(2)));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK(Rational::parse("10/4").str() == "5/2");
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
}

TEST_CASE("arithmetic is exact") {
    Rational third = Rational(1) / Rational(3);
    Rational sum = third + third + third;
    CHECK(sum == Rational(1));
    CHECK(sum.is_integer());
    CHECK((Rational(7) / Rational(2)).str() == "7/2");
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("large values do not overflow") {
    Rational x = Rational::parse("9223372036854775807");
    Rational y = x * x;
    CHECK(y.str() == "85070591730234615847396907784232501249");
    CHECK_FALSE(y.to_int64().has_value());
    CHECK(x.to_int64() == INT64_MAX);
    CHECK((y / x) == x);
}

TEST_CASE("predicates and ordering") {
    CHECK(Rational(3).is_positive_integer());
    CHECK_FALSE(Rational(0).is_positive_integer());
    CHECK_FALSE(Rational::parse("7/2").is_positive_integer());
    CHECK(Rational::parse("1/3") < Rational::parse("1/2"));
    CHECK(Rational(-1) < Rational(0));
}
