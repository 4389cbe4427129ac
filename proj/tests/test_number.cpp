#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "warpspec/number.hpp"

using warpspec::Number;
using warpspec::Rational;

TEST_SUITE("number") {

TEST_CASE("rationals stay in lowest terms") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse keeps decimals exact") {
    CHECK(Number::parse("0.25").to_string() == "1/4");
    CHECK(Number::parse("-1/2").to_string() == "-1/2");
    CHECK(Number::parse("3").to_string() == "3");
    CHECK(Number::parse("-2.5e-1").to_string() == "-1/4");
    CHECK(Number::parse("1e3").to_string() == "1000");
    CHECK(Number::parse("+0.5").to_string() == "1/2");
    CHECK(Number::parse(" 7 ").to_string() == "7");
    CHECK(Number::parse("0.1").is_exact());
    CHECK_THROWS_AS(Number::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Number::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Number::parse("1e"), std::invalid_argument);
    CHECK_THROWS_AS(Number::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Number::parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact on rationals") {
    Number third = Number::fraction(1, 3);
    CHECK((third + third + third) == Number(1));
    CHECK((third * 3).is_exact());
    CHECK((Number(1) / 7 * 7) == Number(1));
    CHECK(Number::fraction(-3, 4).abs() == Number::fraction(3, 4));
    CHECK_THROWS_AS(Number(1) / Number(0), std::domain_error);
}

TEST_CASE("powers stay exact when the result is rational") {
    CHECK(Number::fraction(9, 4).sqrt().to_string() == "3/2");
    CHECK(Number(8).pow(Number::fraction(-2, 3)).to_string() == "1/4");
    CHECK(Number(2).pow(-3).to_string() == "1/8");
    CHECK_FALSE(Number(2).sqrt().is_exact());
    CHECK(Number(2).sqrt().value() == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(Number(-4).sqrt(), std::domain_error);
    CHECK(Number(-2).pow(3) == Number(-8));
    CHECK_THROWS_AS(Number(0).pow(-1), std::domain_error);
    CHECK(Number(0).pow(0) == Number(1));
}

TEST_CASE("overflow falls back to floating point") {
    Number big(std::int64_t{1} << 40);
    Number sq = big * big;
    CHECK_FALSE(sq.is_exact());
    CHECK(sq.value() == doctest::Approx(std::ldexp(1.0, 80)));
}

TEST_CASE("comparison is exact for rationals and tolerant otherwise") {
    CHECK(Number::fraction(1, 3) < Number::fraction(1, 2));
    CHECK_FALSE(Number::fraction(1, 3) == Number::fraction(333333333, 1000000000));
    CHECK(Number::real(1.0 / 3.0) == Number::fraction(1, 3));
    CHECK(Number::real(0.5) == Number::fraction(1, 2));
    CHECK(warpspec::min(Number(2), Number::fraction(3, 2)) == Number::fraction(3, 2));
}

TEST_CASE("random rationals obey the field laws against long double") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
    for (int it = 0; it < 500; ++it) {
        Number x = Number::fraction(num(rng), den(rng));
        Number y = Number::fraction(num(rng), den(rng));
        Number z = Number::fraction(num(rng), den(rng));
        CHECK(((x + y) + z) == (x + (y + z)));
        CHECK((x * (y + z)) == (x * y + x * z));
        CHECK((x - x).is_zero());
        long double ref = static_cast<long double>(x.value()) * y.value() - z.value();
        CHECK(std::fabs(static_cast<long double>((x * y - z).value()) - ref) < 1e-12L);
        if (!y.is_zero()) CHECK(((x / y) * y) == x);
    }
}

TEST_CASE("round trip through to_string") {
    for (const char* s : {"0", "-7", "22/7", "-1/1000000"}) CHECK(Number::parse(Number::parse(s).to_string()) == Number::parse(s));
    Number r = Number::real(0.1 + 0.2);
    CHECK(Number::parse(r.to_string()).value() == r.value());
}

}
