#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcalc/errors.hpp"
#include "qcalc/rational.hpp"

using qcalc::bigint;
using qcalc::rational;

namespace {

std::mt19937_64 rng(0x5eed0002);

long long random_i64(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

rational random_rational() {
    return rational(random_i64(-1000000, 1000000), random_i64(1, 1000000));
}

}  // namespace

TEST_CASE("normalization invariants") {
    rational r(bigint(6), bigint(-8));
    CHECK(r.num() == bigint(-3));
    CHECK(r.den() == bigint(4));
    CHECK(rational(0, 5) == rational());
    CHECK(rational(0, 5).den() == bigint(1));
    CHECK_THROWS_AS(rational(bigint(1), bigint(0)), qcalc::division_by_zero);

    for (int i = 0; i < 1000; ++i) {
        rational x = random_rational();
        CHECK(x.den().sign() > 0);
        CHECK(bigint::gcd(x.num(), x.den()) == bigint(1));
    }
}

TEST_CASE("from_string decimals are exact") {
    CHECK(rational::from_string("42") == rational(42));
    CHECK(rational::from_string("-42") == rational(-42));
    CHECK(rational::from_string("9/7") == rational(9, 7));
    CHECK(rational::from_string("-9/6") == rational(-3, 2));
    CHECK(rational::from_string("0.5") == rational(1, 2));
    CHECK(rational::from_string("0.9144") == rational(1143, 1250));
    CHECK(rational::from_string("273.15") == rational(5463, 20));
    CHECK(rational::from_string("1e3") == rational(1000));
    CHECK(rational::from_string("2.5e-1") == rational(1, 4));
    CHECK(rational::from_string("6.62607015e-34") ==
          rational(bigint(662607015), bigint::pow10(42)));
    CHECK(rational::from_string("6.02214076e23") ==
          rational(bigint(602214076) * bigint::pow10(15), bigint(1)));
    CHECK(rational::from_string("0.453592338") == rational(bigint(453592338), bigint::pow10(9)));

    CHECK_THROWS_AS(rational::from_string(""), qcalc::error);
    CHECK_THROWS_AS(rational::from_string("1.2.3"), qcalc::error);
    CHECK_THROWS_AS(rational::from_string("1/2/3"), qcalc::error);
    CHECK_THROWS_AS(rational::from_string("1e"), qcalc::error);
    CHECK_THROWS_AS(rational::from_string("abc"), qcalc::error);
    CHECK_THROWS_AS(rational::from_string("1/0"), qcalc::division_by_zero);
}

TEST_CASE("field laws") {
    for (int i = 0; i < 1000; ++i) {
        rational a = random_rational(), b = random_rational(), c = random_rational();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + rational() == a);
        CHECK(a * rational(1) == a);
        CHECK(a - a == rational());
        if (!a.is_zero()) {
            CHECK(a * a.reciprocal() == rational(1));
            CHECK(b / a * a == b);
        }
    }
    CHECK_THROWS_AS(rational(3, 4) / rational(), qcalc::division_by_zero);
    CHECK_THROWS_AS(rational().reciprocal(), qcalc::division_by_zero);
}

TEST_CASE("comparison agrees with 128-bit cross multiplication") {
    for (int i = 0; i < 2000; ++i) {
        long long an = random_i64(-1000000000, 1000000000), ad = random_i64(1, 1000000000);
        long long bn = random_i64(-1000000000, 1000000000), bd = random_i64(1, 1000000000);
        rational a(an, ad), b(bn, bd);
        __int128 lhs = static_cast<__int128>(an) * bd;
        __int128 rhs = static_cast<__int128>(bn) * ad;
        CHECK((a < b) == (lhs < rhs));
        CHECK((a == b) == (lhs == rhs));
        CHECK((a > b) == (lhs > rhs));
    }
}

TEST_CASE("integer powers") {
    CHECK(rational::pow(rational(3, 2), 0) == rational(1));
    CHECK(rational::pow(rational(3, 2), 3) == rational(27, 8));
    CHECK(rational::pow(rational(3, 2), -2) == rational(4, 9));
    CHECK(rational::pow(rational(-2), 3) == rational(-8));
    CHECK(rational::pow(rational(), 5) == rational());
    CHECK_THROWS_AS(rational::pow(rational(), -1), qcalc::division_by_zero);

    // the cubic yard factor
    CHECK(rational::pow(rational::from_string("0.9144"), 3) ==
          rational(bigint(764554857984ll), bigint::pow10(12)));
}

TEST_CASE("to_string") {
    CHECK(rational(7).to_string() == "7");
    CHECK(rational(-3, 4).to_string() == "-3/4");
    rational planck_mantissa(bigint(662607015), bigint::pow10(42));
    CHECK(planck_mantissa.num() == bigint(132521403));
    CHECK(planck_mantissa.den() == bigint(2) * bigint::pow10(41));
}
