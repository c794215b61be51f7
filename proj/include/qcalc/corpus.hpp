#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcalc/qexpr.hpp"

namespace qcalc {

/// Assertion operators of the .qeq corpus format:
///   ==  exact equality (magnitude, dimension and system)
///   ~   equivalence (same thing, heterogeneous spelling)
///   <=  order
///   ~=  approximate equality at a relative tolerance
enum class assert_op { exact_equal, equivalent, less_eq, approx };

std::string_view assert_op_symbol(assert_op op);

/// One corpus line: `LHS OP RHS [@ TOL] [!erratum NOTE]`.
struct corpus_assertion {
    std::size_t line_number = 0;
    std::string text;
    assert_op op = assert_op::exact_equal;
    qexpr lhs;
    qexpr rhs;
    rational tolerance;  // used by approx
    bool erratum = false;
    std::string note;
};

struct assertion_outcome {
    corpus_assertion assertion;
    bool passed = false;
    std::string detail;
};

struct corpus_report {
    std::vector<assertion_outcome> outcomes;
    std::size_t passed = 0;         // non-erratum passes
    std::size_t failed = 0;         // non-erratum failures
    std::size_t errata = 0;         // erratum-flagged lines (reported, not failures)
    std::size_t errata_failed = 0;  // erratum lines whose replacement value did not check

    bool ok() const { return failed == 0; }
};

/// Parses a corpus stream; throws parse_error with the line number on
/// malformed lines.
std::vector<corpus_assertion> parse_corpus(std::istream& in, const system_id& default_system,
                                           const system_registry& registry = system_registry::builtins());

/// Evaluates one assertion; returns pass/fail plus a rendering of both sides.
assertion_outcome check_assertion(const corpus_assertion& assertion,
                                  const system_registry& registry = system_registry::builtins(),
                                  int approx_digits = 64);

corpus_report verify_corpus(std::istream& in, const system_id& default_system,
                            const system_registry& registry = system_registry::builtins());

/// Like verify_corpus; throws qcalc::error if the file cannot be opened.
corpus_report verify_corpus_file(const std::string& path, const system_id& default_system,
                                 const system_registry& registry = system_registry::builtins());

}  // namespace qcalc
