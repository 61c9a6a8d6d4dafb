#include <doctest.h>

#include "ccx/rational.hpp"

using ccx::BigInt;
using ccx::Rational;

TEST_CASE("reduction and sign normalization") {
    CHECK(Rational(BigInt(2), BigInt(4)).to_string() == "1/2");
    CHECK(Rational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
    CHECK(Rational(BigInt(0), BigInt(-9)).to_string() == "0");
    CHECK_THROWS(Rational(BigInt(1), BigInt(0)));
}

TEST_CASE("field operations") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b).to_string() == "1/2");
    CHECK((a - b).to_string() == "1/6");
    CHECK((a * b).to_string() == "1/18");
    CHECK((a / b).to_string() == "2");
    CHECK((-a).to_string() == "-1/3");
    CHECK(a.reciprocal().to_string() == "3");
    CHECK(Rational("7/21") == a);
    CHECK(Rational("-5") == Rational(-5));
}

TEST_CASE("ordering and floor") {
    CHECK(Rational(2, 5) < Rational(1, 2));
    CHECK(Rational(-3, 2) < Rational(-1, 2));
    CHECK(Rational(7, 2).floor().to_ll() == 3);
    CHECK(Rational(-7, 2).floor().to_ll() == -4);
    CHECK(Rational(4, 2).floor().to_ll() == 2);
}
