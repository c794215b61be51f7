#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcalc/bigint.hpp"
#include "qcalc/errors.hpp"

using qcalc::bigint;

namespace {

std::mt19937_64 rng(0x5eed0001);

long long random_i64(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

bigint random_big(int max_digits) {
    int digits = static_cast<int>(random_i64(1, max_digits));
    std::string s = random_i64(0, 1) ? "-" : "";
    s += static_cast<char>('1' + random_i64(0, 8));
    for (int i = 1; i < digits; ++i) s += static_cast<char>('0' + random_i64(0, 9));
    return bigint::from_string(s);
}

std::string i128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string out;
    while (mag != 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    return neg ? "-" + out : out;
}

}  // namespace

TEST_CASE("construction and string round trip") {
    CHECK(bigint(0).to_string() == "0");
    CHECK(bigint(-1).to_string() == "-1");
    CHECK(bigint(1000000000).to_string() == "1000000000");
    CHECK(bigint::from_string("000123").to_string() == "123");
    CHECK(bigint::from_string("-0").to_string() == "0");
    CHECK(bigint::from_string("+17").to_string() == "17");
    CHECK(bigint::from_string("999999999999999999999999").to_string() ==
          "999999999999999999999999");
    CHECK_THROWS_AS(bigint::from_string(""), qcalc::error);
    CHECK_THROWS_AS(bigint::from_string("12x"), qcalc::error);
    CHECK_THROWS_AS(bigint::from_string("--3"), qcalc::error);

    for (int i = 0; i < 500; ++i) {
        bigint x = random_big(40);
        CHECK(bigint::from_string(x.to_string()) == x);
    }
}

TEST_CASE("pow10 and digit_count") {
    CHECK(bigint::pow10(0) == bigint(1));
    CHECK(bigint::pow10(1) == bigint(10));
    CHECK(bigint::pow10(9).to_string() == "1000000000");
    CHECK(bigint::pow10(12).to_string() == "1000000000000");
    CHECK(bigint(0).digit_count() == 1);
    CHECK(bigint(9).digit_count() == 1);
    CHECK(bigint(10).digit_count() == 2);
    CHECK(bigint::from_string("-123456789012345").digit_count() == 15);
    for (std::size_t k = 0; k < 60; ++k) CHECK(bigint::pow10(k).digit_count() == k + 1);
}

TEST_CASE("arithmetic agrees with 128-bit oracle") {
    for (int i = 0; i < 4000; ++i) {
        long long a = random_i64(-1000000000000000000ll, 1000000000000000000ll);
        long long b = random_i64(-1000000000000000000ll, 1000000000000000000ll);
        bigint ba(a), bb(b);
        CHECK((ba + bb).to_string() == i128_to_string(static_cast<__int128>(a) + b));
        CHECK((ba - bb).to_string() == i128_to_string(static_cast<__int128>(a) - b));
        CHECK((ba * bb).to_string() == i128_to_string(static_cast<__int128>(a) * b));
        if (b != 0) {
            CHECK((ba / bb).to_string() == i128_to_string(static_cast<__int128>(a) / b));
            CHECK((ba % bb).to_string() == i128_to_string(static_cast<__int128>(a) % b));
        }
        CHECK((ba < bb) == (a < b));
        CHECK((ba == bb) == (a == b));
    }
}

TEST_CASE("divmod law on large operands") {
    for (int i = 0; i < 800; ++i) {
        bigint a = random_big(45);
        bigint b = random_big(20);
        if (b.is_zero()) continue;
        auto [q, r] = bigint::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
    CHECK_THROWS_AS(bigint(5) / bigint(0), qcalc::division_by_zero);
}

TEST_CASE("pow and gcd") {
    CHECK(bigint::pow(bigint(2), 0) == bigint(1));
    CHECK(bigint::pow(bigint(0), 0) == bigint(1));
    CHECK(bigint::pow(bigint(3), 5) == bigint(243));
    CHECK(bigint::pow(bigint(10), 30) == bigint::pow10(30));
    CHECK(bigint::pow(bigint(-2), 31).to_string() == "-2147483648");

    CHECK(bigint::gcd(bigint(0), bigint(0)) == bigint(0));
    CHECK(bigint::gcd(bigint(0), bigint(-7)) == bigint(7));
    CHECK(bigint::gcd(bigint(12), bigint(18)) == bigint(6));
    for (int i = 0; i < 300; ++i) {
        bigint a = random_big(25), b = random_big(25), c = random_big(10);
        bigint g = bigint::gcd(a * c, b * c);
        CHECK((g % c.abs()).is_zero());
        if (!a.is_zero()) CHECK((a % bigint::gcd(a, b)).is_zero());
    }
}

TEST_CASE("known large product") {
    // speed of light times the seconds in a julian year
    bigint c(299792458);
    bigint seconds(31557600);
    CHECK((c * seconds).to_string() == "9460730472580800");
    // 9144^3
    bigint y(9144);
    CHECK((y * y * y).to_string() == "764554857984");
}
