#include <doctest.h>

#include "sgalg/error.hpp"
#include "sgalg/rational.hpp"

using sgalg::BigInt;
using sgalg::Rational;

TEST_CASE("rational canonical form") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, 7).den() == 1);
}

TEST_CASE("rational arithmetic stays canonical") {
    Rational a(1, 3), b(1, 6);
    Rational c = a + b;
    CHECK(c == Rational(1, 2));
    CHECK(c.den() == 2);
    CHECK((a * b) == Rational(1, 18));
    CHECK((a - a).is_zero());
    CHECK((a / b) == Rational(2));
    BigInt g;
    mpz_gcd(g.get_mpz_t(), BigInt(c.num()).get_mpz_t(), BigInt(c.den()).get_mpz_t());
    CHECK(g == 1);
}

TEST_CASE("parse accepts integers and fractions only") {
    CHECK(Rational::parse("3/10") == Rational(3, 10));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational::parse("1.5"), sgalg::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), sgalg::ParseError);
    CHECK_THROWS_AS(Rational::parse(""), sgalg::ParseError);
}

TEST_CASE("parse_decimal handles scientific forms") {
    CHECK(Rational::parse_decimal("1e-9") == Rational(BigInt(1), sgalg::bigint_pow(BigInt(10), 9)));
    CHECK(Rational::parse_decimal("2.5e3") == Rational(2500));
    CHECK(Rational::parse_decimal("0.125") == Rational(1, 8));
    CHECK(Rational::parse_decimal("3/4") == Rational(3, 4));
}

TEST_CASE("decimal rendering is exact") {
    CHECK(Rational(1, 3).decimal(6) == "0.333333");
    CHECK(Rational(2, 3).decimal(6) == "0.666667");
    CHECK(Rational(-1, 8).decimal(3) == "-0.125");
    CHECK(Rational(5).decimal(0) == "5");
    CHECK(Rational(145, 71).decimal(9) == "2.042253521");
}

TEST_CASE("grid rounding bounds denominators") {
    Rational x(1, 3);
    Rational g = x.round_to_grid(16);
    CHECK((g - x).abs() <= Rational(1, 65536));
    BigInt den = g.den();
    CHECK(mpz_cmp(den.get_mpz_t(), BigInt(65536).get_mpz_t()) <= 0);
}

TEST_CASE("pow and floor") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
}
