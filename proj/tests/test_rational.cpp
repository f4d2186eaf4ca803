#include <catch_amalgamated.hpp>

#include <vector>

#include "cimp/error.hpp"
#include "cimp/rational.hpp"
#include "support/instances.hpp"

using cimp::Rational;

TEST_CASE("rational arithmetic is exact and normalized", "[numeric]") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK((Rational(2, 3) * Rational(0, 1)).str() == "0");
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK((Rational(1, 2) / Rational(1, 4)).str() == "2");
    CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));

    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(0, 7).denominator() == 1);
}

TEST_CASE("division by zero is an error", "[numeric]") {
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), cimp::DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 0), cimp::DivisionByZero);
}

TEST_CASE("rational comparison", "[numeric]") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0, 1));
    CHECK(Rational(7, 3) > 2);
}

TEST_CASE("rational text form", "[numeric]") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-1/2").str() == "-1/2");
    CHECK(Rational::parse("2/4").str() == "1/2");
    CHECK(Rational::parse("5").str() == "5");
    CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "a", "1.5", "1/-2", " 1"})
        CHECK_THROWS_AS(Rational::parse(bad), cimp::Error);
}

TEST_CASE("lcm of denominators", "[numeric]") {
    std::vector<Rational> a{Rational(1, 2), Rational(1, 3), Rational(1)};
    CHECK(cimp::lcm_denominators(a) == 6);
    std::vector<Rational> b{Rational(0)};
    CHECK(cimp::lcm_denominators(b) == 1);
    std::vector<Rational> c{Rational(3, 4), Rational(5, 6)};
    CHECK(cimp::lcm_denominators(c) == 12);
    CHECK_THROWS_AS(cimp::lcm_denominators(std::vector<Rational>{}), cimp::Error);
}

TEST_CASE("bit size grows with the operands", "[numeric]") {
    CHECK(Rational(1).bit_size() == 2);
    CHECK(Rational(255, 256).bit_size() == 8 + 9);
}

TEST_CASE("field laws on random rationals", "[numeric][property]") {
    cimp::testing::Generator gen(17);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a = gen.any_rational();
        const Rational b = gen.any_rational();
        const Rational c = gen.any_rational();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == 0);
        if (!b.is_zero())
            CHECK((a / b) * b == a);

        for (const Rational& v : {a + b, a - b, a * b}) {
            CHECK(v.denominator() > 0);
            CHECK(gcd(v.numerator(), v.denominator()) == 1);
        }
        // cmp agrees with the sign of the difference
        CHECK((a < b) == ((a - b).numerator() < 0));
        CHECK((a == b) == ((a - b).numerator() == 0));
    }
}
