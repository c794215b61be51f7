#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <climits>
#include <random>
#include <vector>

#include "qcalc/dimension.hpp"
#include "qcalc/errors.hpp"

using qcalc::base_quantity;
using qcalc::dim_expr;
using qcalc::dim_vec;

namespace {

std::mt19937_64 rng(0x5eed0004);

int random_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

dim_vec random_vec() {
    std::array<int, 7> exps;
    for (int& e : exps) e = random_int(-8, 8);
    return dim_vec::from_list(exps);
}

dim_expr random_expr(int depth) {
    if (depth == 0 || random_int(0, 4) == 0) {
        if (random_int(0, 7) == 0) return dim_expr::one();
        return dim_expr::base(static_cast<base_quantity>(random_int(0, 6)));
    }
    switch (random_int(0, 2)) {
        case 0: return dim_expr::times(random_expr(depth - 1), random_expr(depth - 1));
        case 1: return dim_expr::inv(random_expr(depth - 1));
        default: return dim_expr::pow(random_expr(depth - 1), random_int(-4, 4));
    }
}

const dim_vec L = dim_vec::base(base_quantity::length);
const dim_vec M = dim_vec::base(base_quantity::mass);
const dim_vec T = dim_vec::base(base_quantity::time);

}  // namespace

TEST_CASE("base quantity order and symbols") {
    CHECK(static_cast<int>(base_quantity::length) == 0);
    CHECK(static_cast<int>(base_quantity::time) == 2);
    CHECK(static_cast<int>(base_quantity::current) == 3);
    CHECK(static_cast<int>(base_quantity::intensity) == 6);
    CHECK(qcalc::all_base_quantities.size() == 7);
    CHECK(qcalc::base_quantity_symbol(base_quantity::temperature) == "Theta");
}

TEST_CASE("constructors and projections") {
    CHECK(dim_vec::one().to_list() == std::array<int, 7>{0, 0, 0, 0, 0, 0, 0});
    CHECK(L.to_list() == std::array<int, 7>{1, 0, 0, 0, 0, 0, 0});
    CHECK(T.to_list() == std::array<int, 7>{0, 0, 1, 0, 0, 0, 0});
    CHECK(dim_vec::base(base_quantity::current).to_list() ==
          std::array<int, 7>{0, 0, 0, 1, 0, 0, 0});
    CHECK(dim_vec::one() * M == M);
    CHECK(!dim_vec::one().is_base());
    CHECK(dim_vec::base(base_quantity::temperature).is_base());
    CHECK(dim_vec::base(base_quantity::mass).is_base());
    std::array<int, 7> sq{2, 0, 0, 0, 0, 0, 0};
    CHECK(!dim_vec::from_list(sq).is_base());
}

TEST_CASE("group operations componentwise") {
    dim_vec velocity = L / T;
    CHECK(velocity.to_list() == std::array<int, 7>{1, 0, -1, 0, 0, 0, 0});
    CHECK(velocity * T == L);

    std::array<int, 7> a{1, 0, -1, 0, 0, 0, 0}, b{0, 2, 1, 0, 0, 0, 0};
    CHECK((dim_vec::from_list(a) * dim_vec::from_list(b)).to_list() ==
          std::array<int, 7>{1, 2, 0, 0, 0, 0, 0});

    CHECK(T.inverse().to_list() == std::array<int, 7>{0, 0, -1, 0, 0, 0, 0});
    CHECK(dim_vec::one().inverse() == dim_vec::one());
    std::array<int, 7> c{2, -3, 0, 0, 0, 0, 0};
    CHECK(dim_vec::from_list(c).inverse().to_list() ==
          std::array<int, 7>{-2, 3, 0, 0, 0, 0, 0});

    CHECK(L / T == L * T.inverse());
    CHECK(M / M == dim_vec::one());
    CHECK(M / dim_vec::one() == M);

    CHECK(L.pow(2).to_list() == std::array<int, 7>{2, 0, 0, 0, 0, 0, 0});
    CHECK(velocity.pow(0) == dim_vec::one());
    CHECK(velocity.pow(-3).to_list() == std::array<int, 7>{-3, 0, 3, 0, 0, 0, 0});
}

TEST_CASE("overflow detection") {
    std::array<int, 7> big{INT_MAX, 0, 0, 0, 0, 0, 0};
    dim_vec x = dim_vec::from_list(big);
    CHECK_THROWS_AS(x * L, qcalc::arithmetic_overflow);
    CHECK_THROWS_AS(x.pow(2), qcalc::arithmetic_overflow);
    std::array<int, 7> low{INT_MIN, 0, 0, 0, 0, 0, 0};
    CHECK_THROWS_AS(dim_vec::from_list(low).inverse(), qcalc::arithmetic_overflow);
}

TEST_CASE("list codec") {
    std::array<int, 7> len{1, 0, 0, 0, 0, 0, 0};
    CHECK(dim_vec::from_list(len) == L);
    CHECK(dim_vec::from_list(std::vector<int>{}) == dim_vec::one());
    CHECK(dim_vec::from_list(std::vector<int>{1, 2, 3}) == dim_vec::one());
    CHECK_THROWS_AS(dim_vec::from_list_strict(std::vector<int>{1, 2, 3}), qcalc::error);
    CHECK(dim_vec::from_list_strict(len) == L);

    for (int i = 0; i < 100; ++i) {
        dim_vec v = random_vec();
        CHECK(dim_vec::from_list(v.to_list()) == v);
    }
}

TEST_CASE("abelian group laws over random vectors") {
    for (int i = 0; i < 1200; ++i) {
        dim_vec x = random_vec(), y = random_vec(), z = random_vec();
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * dim_vec::one() == x);
        CHECK(x * x.inverse() == dim_vec::one());
    }
}

TEST_CASE("codec equations over random lists") {
    for (int i = 0; i < 1200; ++i) {
        std::array<int, 7> xs, ys;
        for (int k = 0; k < 7; ++k) {
            xs[k] = random_int(-8, 8);
            ys[k] = random_int(-8, 8);
        }
        int n = random_int(-5, 5);

        std::array<int, 7> sum, scaled, negated, zeros{};
        for (int k = 0; k < 7; ++k) {
            sum[k] = xs[k] + ys[k];
            scaled[k] = xs[k] * n;
            negated[k] = -xs[k];
        }
        CHECK(dim_vec::from_list(xs) * dim_vec::from_list(ys) == dim_vec::from_list(sum));
        CHECK(dim_vec::from_list(xs).pow(n) == dim_vec::from_list(scaled));
        CHECK(dim_vec::from_list(xs).inverse() == dim_vec::from_list(negated));
        CHECK(dim_vec::one() == dim_vec::from_list(zeros));
    }
}

TEST_CASE("expression evaluation") {
    dim_expr eL = dim_expr::base(base_quantity::length);
    dim_expr eT = dim_expr::base(base_quantity::time);
    CHECK(eL.eval() == L);
    CHECK(dim_expr::one().eval() == dim_vec::one());
    CHECK(dim_expr::times(eL, dim_expr::inv(eT)).eval().to_list() ==
          std::array<int, 7>{1, 0, -1, 0, 0, 0, 0});
    CHECK(dim_expr::pow(eL, 0).eval() == dim_vec::one());
    CHECK(dim_expr::pow(dim_expr::times(eL, eT), -2).eval() == (L * T).pow(-2));
    for (int i = 0; i < 200; ++i) {
        dim_expr e = random_expr(5);
        CHECK(dim_expr::inv(e).eval() == e.eval().inverse());
    }
}

TEST_CASE("normalisation") {
    // T^4*L^-2*M^-1*I^2*M  ->  L^-2*T^4*I^2
    dim_expr input = dim_expr::parse("T^4*L^-2*M^-1*I^2*M");
    dim_expr expected = dim_expr::parse("L^-2*T^4*I^2");
    CHECK(input.normalise() == expected);
    CHECK(input.normalise().to_string() == "L^-2*T^4*I^2");

    CHECK(dim_expr::parse("L*T^-1*T").normalise() == dim_expr::parse("L"));
    CHECK(dim_expr::parse("M*M^-1").normalise() == dim_expr::one());
    CHECK(dim_expr::parse("1").normalise() == dim_expr::one());

    for (int i = 0; i < 150; ++i) {
        dim_expr e = random_expr(8);
        dim_expr n = e.normalise();
        CHECK(n.eval() == e.eval());            // sound
        CHECK(n.normalise() == n);              // idempotent
    }

    // canonical-form uniqueness, both directions
    for (int i = 0; i < 300; ++i) {
        dim_expr a = random_expr(6), b = random_expr(6);
        CHECK((a.eval() == b.eval()) == (a.normalise() == b.normalise()));
    }
    for (int i = 0; i < 150; ++i) {
        dim_expr a = random_expr(6);
        dim_expr b = dim_expr::times(dim_expr::times(a, random_expr(3)),
                                     dim_expr::inv(a));  // same vector, different shape
        dim_expr c = dim_expr::times(b.lhs().rhs(), dim_expr::one());
        CHECK((b.eval() == c.eval()) == (b.normalise() == c.normalise()));
    }
}

TEST_CASE("dimension grammar") {
    CHECK(dim_expr::parse("L").eval() == L);
    CHECK(dim_expr::parse("  L * T ^ -1 ").eval() == L / T);
    CHECK(dim_expr::parse("L/T").eval() == L / T);
    CHECK(dim_expr::parse("(L*M)^2").eval() == (L * M).pow(2));
    CHECK(dim_expr::parse("Theta").eval() == dim_vec::base(base_quantity::temperature));
    CHECK(dim_expr::parse("1").eval() == dim_vec::one());
    CHECK(dim_expr::parse("L^2*M*T^-3").to_string() == "L^2*M*T^-3");

    CHECK_THROWS_AS(dim_expr::parse("Q"), qcalc::parse_error);
    CHECK_THROWS_AS(dim_expr::parse("L^"), qcalc::parse_error);
    CHECK_THROWS_AS(dim_expr::parse("L*"), qcalc::parse_error);
    CHECK_THROWS_AS(dim_expr::parse("(L"), qcalc::parse_error);
    CHECK_THROWS_AS(dim_expr::parse("L L"), qcalc::parse_error);
    CHECK_THROWS_AS(dim_expr::parse(""), qcalc::parse_error);

    // Rendering any tree preserves meaning; rendering a parsed tree round
    // trips structurally (programmatic inv nodes read back as '/' or '^-1').
    for (int i = 0; i < 300; ++i) {
        dim_expr e = random_expr(6);
        dim_expr reparsed = dim_expr::parse(e.to_string());
        CHECK(reparsed.eval() == e.eval());
        CHECK(dim_expr::parse(reparsed.to_string()) == reparsed);
    }
    for (const char* text :
         {"T^4*L^-2*M^-1*I^2*M", "L/(T*M)/N", "L*(M*T)^-1", "1/Theta", "L/T^-2"}) {
        dim_expr e = dim_expr::parse(text);
        CHECK(dim_expr::parse(e.to_string()) == e);
    }
}

TEST_CASE("canonical rendering order") {
    std::array<int, 7> exps{-2, 1, 4, 2, 0, 0, -1};
    CHECK(dim_vec::from_list(exps).to_string() == "L^-2*M*T^4*I^2*J^-1");
    CHECK(dim_vec::one().to_string() == "1");
    CHECK((M * L.pow(2) * T.pow(-3)).to_string() == "L^2*M*T^-3");
}
