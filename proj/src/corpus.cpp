#include "qcalc/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>

#include "qcalc/errors.hpp"

namespace qcalc {

std::string_view assert_op_symbol(assert_op op) {
    switch (op) {
        case assert_op::exact_equal: return "==";
        case assert_op::equivalent: return "~";
        case assert_op::less_eq: return "<=";
        case assert_op::approx: return "~=";
    }
    throw error("unknown assertion operator");
}

namespace {

constexpr const char* kErratumMarker = "!erratum";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Locates the assertion operator. '=', '~' and '<' cannot occur inside
// expressions, so a simple scan suffices; two-character operators win.
bool find_operator(std::string_view line, std::size_t* pos, std::size_t* len, assert_op* op) {
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
        std::string_view two = line.substr(i, 2);
        if (two == "==") {
            *pos = i, *len = 2, *op = assert_op::exact_equal;
            return true;
        }
        if (two == "~=") {
            *pos = i, *len = 2, *op = assert_op::approx;
            return true;
        }
        if (two == "<=") {
            *pos = i, *len = 2, *op = assert_op::less_eq;
            return true;
        }
        if (line[i] == '~') {
            *pos = i, *len = 1, *op = assert_op::equivalent;
            return true;
        }
    }
    if (!line.empty() && line.back() == '~') {
        *pos = line.size() - 1, *len = 1, *op = assert_op::equivalent;
        return true;
    }
    return false;
}

std::string render_side(const quantity& q, int digits) {
    return q.mag().to_decimal(digits) + " :: " + q.dim().to_string() + " [" +
           q.system().name() + "]";
}

}  // namespace

std::vector<corpus_assertion> parse_corpus(std::istream& in, const system_id& default_system,
                                           const system_registry& registry) {
    std::vector<corpus_assertion> out;
    std::string raw;
    std::size_t line_number = 0;
    while (std::getline(in, raw)) {
        ++line_number;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        corpus_assertion a;
        a.line_number = line_number;

        std::size_t marker = line.find(kErratumMarker);
        if (marker != std::string_view::npos) {
            a.erratum = true;
            a.note = std::string(trim(line.substr(marker + std::string_view(kErratumMarker).size())));
            line = trim(line.substr(0, marker));
        }

        std::size_t at = line.find('@');
        std::string_view tol_text;
        if (at != std::string_view::npos) {
            tol_text = trim(line.substr(at + 1));
            line = trim(line.substr(0, at));
        }

        a.text = std::string(line);

        std::size_t op_pos = 0, op_len = 0;
        if (!find_operator(line, &op_pos, &op_len, &a.op))
            throw parse_error("line " + std::to_string(line_number) + ": no assertion operator",
                              line_number);

        a.tolerance = rational(1, 1000000);
        if (!tol_text.empty()) {
            if (a.op != assert_op::approx)
                throw parse_error("line " + std::to_string(line_number) +
                                      ": tolerance only applies to '~='",
                                  line_number);
            a.tolerance = rational::from_string(tol_text);
            if (a.tolerance.sign() <= 0)
                throw parse_error("line " + std::to_string(line_number) +
                                      ": tolerance must be positive",
                                  line_number);
        }

        try {
            a.lhs = parse_quantity_expr(trim(line.substr(0, op_pos)), default_system, registry);
            a.rhs = parse_quantity_expr(trim(line.substr(op_pos + op_len)), default_system,
                                        registry);
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(line_number) + ": " + e.what(),
                              line_number);
        }
        out.push_back(std::move(a));
    }
    return out;
}

assertion_outcome check_assertion(const corpus_assertion& assertion,
                                  const system_registry& registry, int approx_digits) {
    assertion_outcome outcome{assertion, false, ""};
    quantity lhs = quantity::zero(system_id{});
    quantity rhs = quantity::zero(system_id{});
    try {
        lhs = eval(assertion.lhs, registry);
        rhs = eval(assertion.rhs, registry);
    } catch (const error& e) {
        outcome.detail = std::string("evaluation error: ") + e.what();
        return outcome;
    }
    outcome.detail = render_side(lhs, 12) + "  " + std::string(assert_op_symbol(assertion.op)) +
                     "  " + render_side(rhs, 12);
    try {
        switch (assertion.op) {
            case assert_op::exact_equal:
                if (lhs.system() != rhs.system())
                    throw system_mismatch("exact equality across systems");
                outcome.passed = lhs.dim() == rhs.dim() && lhs.mag() == rhs.mag();
                break;
            case assert_op::equivalent:
                outcome.passed = equivalent(lhs, rhs);
                break;
            case assert_op::less_eq:
                outcome.passed = less_eq(lhs, rhs);
                break;
            case assert_op::approx: {
                if (lhs.system() != rhs.system())
                    throw system_mismatch("approximate equality across systems");
                if (lhs.dim() != rhs.dim()) {
                    outcome.passed = false;
                    break;
                }
                rational a = lhs.mag().approx(approx_digits);
                rational b = rhs.mag().approx(approx_digits);
                rational diff = (a - b).abs();
                rational mag = std::max(a.abs(), b.abs());
                outcome.passed = diff <= assertion.tolerance * mag;
                break;
            }
        }
    } catch (const error& e) {
        outcome.passed = false;
        outcome.detail += std::string("; comparison error: ") + e.what();
    }
    return outcome;
}

corpus_report verify_corpus(std::istream& in, const system_id& default_system,
                            const system_registry& registry) {
    corpus_report report;
    for (const corpus_assertion& a : parse_corpus(in, default_system, registry)) {
        assertion_outcome outcome = check_assertion(a, registry);
        if (a.erratum) {
            ++report.errata;
            if (!outcome.passed) ++report.errata_failed;
        } else if (outcome.passed) {
            ++report.passed;
        } else {
            ++report.failed;
        }
        report.outcomes.push_back(std::move(outcome));
    }
    return report;
}

corpus_report verify_corpus_file(const std::string& path, const system_id& default_system,
                                 const system_registry& registry) {
    std::ifstream in(path);
    if (!in) throw error("cannot open corpus file '" + path + "'");
    return verify_corpus(in, default_system, registry);
}

}  // namespace qcalc
