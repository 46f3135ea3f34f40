#include <doctest.h>

#include "cayley/errors.hpp"
#include "generators.hpp"

using cayley::Rational;

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("6/4").to_string() == "3/2");
    CHECK(Rational::parse("-0").to_string() == "0");
    CHECK(Rational(-8, 3).to_string() == "-8/3");
    CHECK(Rational(4, 2).to_string() == "2");
}

TEST_CASE("rational parse rejects malformed text") {
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "+-1", "1.5", "a", "1/2/3", " 1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), cayley::ParseError);
    }
}

TEST_CASE("rational exact arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(3, 2) * Rational(3, 2) == Rational(9, 4));
    CHECK(Rational(1, 2) * Rational(3, 2) * (Rational(3) - Rational(3, 2)) == Rational(9, 8));
    CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK_THROWS(Rational(0).inverse());
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("rational stays normalized [property]") {
    gen::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        Rational a = rng.rational(1000), b = rng.nonzero(1000);
        for (const Rational& r : {a + b, a - b, a * b, a / b}) {
            CHECK(r.denominator() > 0);
            CHECK(gcd(r.numerator(), r.denominator()) == 1);
            CHECK(Rational::parse(r.to_string()) == r);
        }
        CHECK((a / b) * b == a);
    }
}
