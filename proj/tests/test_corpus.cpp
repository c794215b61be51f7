#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "qcalc/corpus.hpp"
#include "qcalc/errors.hpp"

using namespace qcalc;

namespace {

corpus_report run(const std::string& text) {
    std::istringstream in(text);
    return verify_corpus(in, si_system());
}

}  // namespace

TEST_CASE("empty corpus") {
    corpus_report r = run("");
    CHECK(r.passed == 0);
    CHECK(r.failed == 0);
    CHECK(r.errata == 0);
    CHECK(r.ok());
}

TEST_CASE("comments and blank lines are skipped") {
    corpus_report r = run("# a comment\n\n   \n# another\n1 hour == 3600 second\n");
    CHECK(r.passed == 1);
    CHECK(r.outcomes.size() == 1);
    CHECK(r.outcomes[0].assertion.line_number == 5);
}

TEST_CASE("operators") {
    corpus_report r = run(
        "1 hour == 3600 second\n"
        "joule ~ newton * metre\n"
        "3 metre <= 4 metre\n"
        "1 metre ~= 1.0000004 metre @ 1e-6\n");
    CHECK(r.passed == 4);
    CHECK(r.failed == 0);
}

TEST_CASE("failures are reported") {
    corpus_report r = run(
        "1 hour == 3601 second\n"
        "4 metre <= 3 metre\n"
        "3 metre <= 4 kilogram\n"
        "1 metre ~= 1.01 metre @ 1e-6\n"
        "1 metre ~= 1.01 kilogram @ 1\n");
    CHECK(r.passed == 0);
    CHECK(r.failed == 5);
    CHECK(!r.ok());
    CHECK(r.outcomes[0].detail.find("3601") != std::string::npos);
}

TEST_CASE("approx tolerance semantics") {
    // |l-r| <= tol * max(|l|,|r|)
    CHECK(run("100 metre ~= 101 metre @ 0.0099009").failed == 1);
    CHECK(run("100 metre ~= 101 metre @ 0.0099010").passed == 1);
    // default tolerance is 1e-6
    CHECK(run("1 metre ~= 1.0000009 metre").passed == 1);
    CHECK(run("1 metre ~= 1.0000011 metre").failed == 1);
}

TEST_CASE("errata are counted separately") {
    corpus_report r = run(
        "1 hour == 3600 second\n"
        "to[SI](1 BIS:ounce) ~= 28.3495 gram @ 1e-4 !erratum source prints 37.8 g\n");
    CHECK(r.passed == 1);
    CHECK(r.failed == 0);
    CHECK(r.errata == 1);
    CHECK(r.errata_failed == 0);
    CHECK(r.ok());
    CHECK(r.outcomes[1].assertion.erratum);
    CHECK(r.outcomes[1].assertion.note == "source prints 37.8 g");
    CHECK(r.outcomes[1].passed);

    // an erratum line that fails its replacement value is flagged but does
    // not fail the run
    corpus_report bad = run("1 hour == 9999 second !erratum nonsense\n");
    CHECK(bad.errata == 1);
    CHECK(bad.errata_failed == 1);
    CHECK(bad.ok());
}

TEST_CASE("evaluation errors fail the line") {
    corpus_report r = run("metre * BIS:pound == metre\n");
    CHECK(r.failed == 1);
    CHECK(r.outcomes[0].detail.find("evaluation error") != std::string::npos);

    corpus_report sys = run("metre == BIS:yard\n");
    CHECK(sys.failed == 1);
}

TEST_CASE("syntax errors carry the line number") {
    std::istringstream in("1 hour == 3600 second\n1 hour 3600 second\n");
    CHECK_THROWS_AS(verify_corpus(in, si_system()), parse_error);
    std::istringstream in2("1 hour == 3600 second\n20 cubits == 1 metre\n");
    try {
        verify_corpus(in2, si_system());
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::istringstream in3("1 metre == 1 metre @ 1e-3\n");
    CHECK_THROWS_AS(verify_corpus(in3, si_system()), parse_error);
    std::istringstream in4("1 metre ~= 1 metre @ -1e-3\n");
    CHECK_THROWS_AS(verify_corpus(in4, si_system()), parse_error);
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(verify_corpus_file("/nonexistent/nope.qeq", si_system()), error);
}

#ifdef QCALC_CORPUS_PATH
TEST_CASE("bundled corpus invariants") {
    std::ifstream in(QCALC_CORPUS_PATH);
    REQUIRE(in.good());
    std::vector<corpus_assertion> assertions = parse_corpus(in, si_system());
    CHECK(assertions.size() > 50);

    for (const corpus_assertion& a : assertions) {
        INFO("line ", a.line_number, ": ", a.text);
        // rendering a parsed expression reparses to a structurally equal tree
        qexpr lhs_again = parse_quantity_expr(a.lhs.to_string(), si_system());
        qexpr rhs_again = parse_quantity_expr(a.rhs.to_string(), si_system());
        CHECK(lhs_again == a.lhs);
        CHECK(rhs_again == a.rhs);

        // the eq command's verdict agrees with the quantity relations
        assertion_outcome outcome = check_assertion(a);
        quantity l = eval(a.lhs), r = eval(a.rhs);
        if (a.op == assert_op::equivalent && l.system() == r.system())
            CHECK(outcome.passed == equivalent(l, r));
        if (a.op == assert_op::less_eq && l.system() == r.system())
            CHECK(outcome.passed == less_eq(l, r));
        if (a.op == assert_op::exact_equal && l.system() == r.system())
            CHECK(outcome.passed == (l == r));
    }
}
#endif
