#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcalc/errors.hpp"
#include "qcalc/qexpr.hpp"

using namespace qcalc;

namespace {

const system_id SI = si_system();
const system_id BIS{"BIS"};
const system_id CGS{"CGS"};

quantity run(std::string_view text, const system_id& sys = si_system()) {
    return eval(parse_quantity_expr(text, sys));
}

quantity si_unit(const std::string& name) {
    return system_registry::builtins().find_unit(SI, name)->value;
}

dim_vec dims(std::string_view text) { return dim_expr::parse(text).eval(); }

}  // namespace

TEST_CASE("scaling by juxtaposition") {
    CHECK(run("20 metre") == scale(exact_scalar(20), si_unit("metre")));
    CHECK(run("20 metre") == run("20 * metre"));
    CHECK(run("1") == quantity::one(SI));
    CHECK(run("1", BIS) == quantity::one(BIS));
    CHECK(run("-3 metre").mag() == exact_scalar(-3));
}

TEST_CASE("operators and precedence") {
    CHECK(run("10 metre * second^-1") ==
          scale(exact_scalar(10), si_unit("metre") * si_unit("second").inverse()));
    // juxtaposition binds tighter than '/')
    CHECK(run("25 metre/second") ==
          scale(exact_scalar(25), si_unit("metre")) / si_unit("second"));
    // and an exponent right after the juxtaposed unit belongs to the unit
    CHECK(run("2 metre^3") == scale(exact_scalar(2), si_unit("metre").pow(3)));
    CHECK(run("(2 metre)^3") == scale(exact_scalar(8), si_unit("metre").pow(3)));
    CHECK(run("(5 metre/second) * (10 second)") == run("50 metre"));
    CHECK(run("joule / newton").dim() == dims("L"));
    CHECK(run("3/4").mag() == exact_scalar(rational(3, 4)));
    CHECK(run("1/1000 * metre") == scale(exact_scalar(rational(1, 1000)), si_unit("metre")));
    CHECK(run("2^3") == scale(exact_scalar(8), quantity::one(SI)));
    CHECK(run("2^-2").mag() == exact_scalar(rational(1, 4)));
}

TEST_CASE("pi is a dimensionless builtin") {
    CHECK(run("pi").mag() == exact_scalar::pi());
    CHECK(run("2 pi").mag() == exact_scalar(rational(2), 1));
    CHECK(run("pi^2").mag() == exact_scalar(rational(1), 2));
    CHECK(run("648000/pi").mag() == exact_scalar(rational(648000), -1));
    CHECK(run("180 degree") == run("pi * radian"));
}

TEST_CASE("prefixed units") {
    CHECK(run("40 millimetre") ==
          scale(exact_scalar(rational(40, 1000)), si_unit("metre")));
    CHECK(run("1 kilometre") == run("1000 metre"));
    CHECK(run("1 km") == run("1000 metre"));
    CHECK(run("25 metre/second") == run("90 kilometre/hour"));
    CHECK(run("1 hectare") == run("hectometre^2"));
    CHECK(run("1 mg") == run("1/1000000 * kilogram"));
}

TEST_CASE("qualified units") {
    quantity pound = eval(parse_quantity_expr("BIS:pound", SI));
    CHECK(pound.system() == BIS);
    CHECK(pound == bunit(base_quantity::mass, BIS));
    CHECK(run("30 BIS:pound").mag() == exact_scalar(30));
    CHECK(run("12 CGS:centimetre").system() == CGS);
    // unqualified names resolve in the default system
    CHECK(run("second", BIS) == bunit(base_quantity::time, BIS));
}

TEST_CASE("conversion syntax") {
    quantity inches = run("to[BIS](12 CGS:centimetre)");
    CHECK(inches.system() == BIS);
    rational got = (inches / run("BIS:inch", BIS)).mag().coeff();
    rational want = rational::from_string("4.724");
    CHECK((got - want).abs() <= rational(1, 1000) * want);

    CHECK(run("to[SI](30 BIS:pound)") ==
          scale(exact_scalar(rational::from_string("13.60777014")), si_unit("kilogram")));
    CHECK(run("to[SI](1 BIS:yard)") ==
          scale(exact_scalar(rational::from_string("0.9143993")), si_unit("metre")));
    CHECK(run("to[SI](joule)") == si_unit("joule"));
}

TEST_CASE("dnorm syntax") {
    CHECK(run("dnorm[L]((5 metre/second) * (10 second))") == run("50 metre"));
    CHECK(run("dnorm[M](5 metre)") == quantity(exact_scalar(0), dims("M"), SI));
    CHECK(run("dnorm[L*T^-1](metre/second)") == run("metre/second"));
    CHECK(run("dnorm[1](radian)") == quantity::one(SI));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(run("20 cubits"), parse_error);
    CHECK_THROWS_AS(run("metre +"), parse_error);
    CHECK_THROWS_AS(run("(metre"), parse_error);
    CHECK_THROWS_AS(run("metre^x"), parse_error);
    CHECK_THROWS_AS(run("metre^1.5"), parse_error);
    CHECK_THROWS_AS(run("metre^"), parse_error);
    CHECK_THROWS_AS(run("to[FPS](metre)"), parse_error);
    CHECK_THROWS_AS(run("to[SI)(metre)"), parse_error);
    CHECK_THROWS_AS(run("dnorm[Q](metre)"), parse_error);
    CHECK_THROWS_AS(run("dnorm[L(metre)"), parse_error);
    CHECK_THROWS_AS(run(""), parse_error);
    CHECK_THROWS_AS(run("2 metre^3^2"), parse_error);
    CHECK_THROWS_AS(run("kilokilogram"), parse_error);
    CHECK_THROWS_AS(run("BIS:metre"), parse_error);

    try {
        run("20 cubits");
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.position == 3);
        CHECK(std::string(e.what()).find("cubits") != std::string::npos);
    }
}

TEST_CASE("evaluation errors propagate") {
    CHECK_THROWS_AS(run("metre * BIS:pound"), system_mismatch);
    CHECK_THROWS_AS(run("metre / (0 second)"), division_by_zero);
    CHECK_THROWS_AS(run("(0 metre)^-1"), division_by_zero);
}

TEST_CASE("render and reparse") {
    const char* samples[] = {
        "20 metre",
        "10 metre * second^-1",
        "40 millimetre",
        "(5 metre/second) * (10 second)",
        "25 metre/second",
        "90 kilometre/hour",
        "to[BIS](12 CGS:centimetre)",
        "dnorm[L]((5 metre/second) * (10 second))",
        "277.421 BIS:inch^3",
        "648000/pi * astronomical-unit",
        "planck / 6.62607015e-34 * metre^-2 * second",
        "1 hectare",
        "pi",
        "2 pi",
        "(0.9144 metre)^3",
        "joule / newton",
        "1/1000 * metre^3",
    };
    for (const char* text : samples) {
        qexpr ast = parse_quantity_expr(text, SI);
        qexpr again = parse_quantity_expr(ast.to_string(), SI);
        CHECK(again == ast);
        CHECK(eval(again) == eval(ast));
    }
}
