// qcalc: parse, dimension-check, normalise, convert and verify quantity
// expressions over the ISQ/SI ontology. Exact arithmetic throughout.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcalc/corpus.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/qexpr.hpp"

using nlohmann::ordered_json;
using namespace qcalc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDimensionMismatch = 3;

struct options {
    std::string system = "SI";
    int digits = 10;
    bool exact = false;
    bool json = false;
    std::string schemas_file;
};

std::string render_magnitude(const exact_scalar& m, const options& opt) {
    if (opt.exact) return m.to_exact_string();
    return m.to_decimal(opt.digits);
}

std::string render_quantity(const quantity& q, const options& opt) {
    return render_magnitude(q.mag(), opt) + " :: " + q.dim().to_string() + " [" +
           q.system().name() + "]";
}

ordered_json magnitude_json(const exact_scalar& m, const options& opt) {
    return ordered_json{{"num", m.coeff().num().to_string()},
                        {"den", m.coeff().den().to_string()},
                        {"piexp", m.pi_exponent()},
                        {"decimal", m.to_decimal(opt.digits)}};
}

ordered_json quantity_json(const quantity& q, const options& opt) {
    ordered_json dims = ordered_json::array();
    for (int e : q.dim().to_list()) dims.push_back(e);
    return ordered_json{{"magnitude", magnitude_json(q.mag(), opt)},
                        {"dim", std::move(dims)},
                        {"system", q.system().name()}};
}

quantity evaluate(const std::string& text, const options& opt, const system_registry& registry) {
    return eval(parse_quantity_expr(text, system_id{opt.system}, registry), registry);
}

int cmd_dim(const std::string& expr, const options& opt, const system_registry& registry) {
    quantity q = evaluate(expr, opt, registry);
    if (opt.json) {
        ordered_json out{{"ok", true},
                         {"expr", expr},
                         {"dim", q.dim().to_string()},
                         {"quantity", quantity_json(q, opt)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << q.dim().to_string() << "\n";
    }
    return kExitOk;
}

int cmd_norm(const std::string& dim_text, const options& opt) {
    dim_expr normal = dim_expr::parse(dim_text).normalise();
    if (opt.json) {
        ordered_json out{{"ok", true}, {"input", dim_text}, {"normal", normal.to_string()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << normal.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_convert(const std::string& expr, const std::string& target, const options& opt,
                const system_registry& registry) {
    quantity lhs = evaluate(expr, opt, registry);
    quantity unit = evaluate(target, opt, registry);
    if (lhs.system() != unit.system()) lhs = qmc(lhs, unit.system(), registry);
    if (lhs.dim() != unit.dim()) {
        std::string message = "dimension mismatch: " + lhs.dim().to_string() + " vs " +
                              unit.dim().to_string();
        if (opt.json) {
            ordered_json out{{"ok", false},
                             {"error", message},
                             {"lhs", quantity_json(lhs, opt)},
                             {"rhs", quantity_json(unit, opt)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cerr << "qcalc: " << message << "\n";
        }
        return kExitDimensionMismatch;
    }
    quantity ratio = lhs / unit;
    if (opt.json) {
        ordered_json out{{"ok", true},
                         {"lhs", quantity_json(lhs, opt)},
                         {"rhs", quantity_json(unit, opt)},
                         {"verdict", ratio.mag().to_decimal(opt.digits)},
                         {"exact", ratio.mag().to_exact_string()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render_magnitude(ratio.mag(), opt);
        if (opt.exact)
            std::cout << "\n";
        else
            std::cout << " (exact: " << ratio.mag().to_exact_string() << ")\n";
    }
    return kExitOk;
}

int cmd_eq(const std::string& lhs_text, const std::string& op_text, const std::string& rhs_text,
           const std::string& tol_text, const options& opt, const system_registry& registry) {
    corpus_assertion a;
    if (op_text == "==")
        a.op = assert_op::exact_equal;
    else if (op_text == "~")
        a.op = assert_op::equivalent;
    else if (op_text == "<=")
        a.op = assert_op::less_eq;
    else if (op_text == "~=")
        a.op = assert_op::approx;
    else
        throw error("unknown operator '" + op_text + "' (expected ==, ~, <= or ~=)");
    a.tolerance = rational::from_string(tol_text);
    if (a.tolerance.sign() <= 0) throw error("tolerance must be positive");
    system_id default_system{opt.system};
    a.lhs = parse_quantity_expr(lhs_text, default_system, registry);
    a.rhs = parse_quantity_expr(rhs_text, default_system, registry);
    a.text = lhs_text + " " + op_text + " " + rhs_text;

    assertion_outcome outcome = check_assertion(a, registry);
    quantity lhs = eval(a.lhs, registry);
    quantity rhs = eval(a.rhs, registry);
    if (opt.json) {
        ordered_json out{{"ok", true},
                         {"lhs", quantity_json(lhs, opt)},
                         {"rhs", quantity_json(rhs, opt)},
                         {"verdict", outcome.passed}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "lhs: " << render_quantity(lhs, opt) << "\n";
        std::cout << "rhs: " << render_quantity(rhs, opt) << "\n";
        std::cout << "verdict: " << (outcome.passed ? "true" : "false") << "\n";
    }
    return outcome.passed ? kExitOk : kExitAssertionFailed;
}

int cmd_verify(const std::string& path, const options& opt, const system_registry& registry) {
    corpus_report report = verify_corpus_file(path, system_id{opt.system}, registry);
    if (opt.json) {
        ordered_json lines = ordered_json::array();
        for (const assertion_outcome& o : report.outcomes)
            lines.push_back(ordered_json{{"line", o.assertion.line_number},
                                         {"text", o.assertion.text},
                                         {"erratum", o.assertion.erratum},
                                         {"passed", o.passed},
                                         {"detail", o.detail}});
        ordered_json out{{"ok", report.ok()},       {"passed", report.passed},
                         {"failed", report.failed}, {"errata", report.errata},
                         {"errata_failed", report.errata_failed}, {"lines", std::move(lines)}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const assertion_outcome& o : report.outcomes) {
            const char* verdict = o.assertion.erratum ? (o.passed ? "erratum" : "erratum!")
                                                      : (o.passed ? "ok" : "FAIL");
            std::cout << verdict << "\tline " << o.assertion.line_number << ": "
                      << o.assertion.text;
            if (o.assertion.erratum && !o.assertion.note.empty())
                std::cout << "  [" << o.assertion.note << "]";
            std::cout << "\n";
            if (!o.passed) std::cout << "\t" << o.detail << "\n";
        }
        std::cout << "passed " << report.passed << ", failed " << report.failed << ", errata "
                  << report.errata << "\n";
    }
    return report.ok() ? kExitOk : kExitAssertionFailed;
}

int cmd_units(const std::string& system_name, const options& opt,
              const system_registry& registry) {
    system_id sys{system_name};
    auto entry = registry.find(sys);
    if (!entry) throw lookup_error("unknown system '" + system_name + "'");

    if (opt.json) {
        ordered_json out = ordered_json::array();
        for (const auto& [name, unit] : entry->units) {
            ordered_json dims = ordered_json::array();
            for (int e : unit.value.dim().to_list()) dims.push_back(e);
            ordered_json record{{"name", unit.name},
                                {"aliases", unit.aliases},
                                {"system", sys.name()},
                                {"category", std::string(unit_category_name(unit.category))},
                                {"magnitude", {{"num", unit.value.mag().coeff().num().to_string()},
                                               {"den", unit.value.mag().coeff().den().to_string()},
                                               {"piexp", unit.value.mag().pi_exponent()}}},
                                {"dim", std::move(dims)},
                                {"prefixable", unit.prefixable}};
            if (!unit.note.empty()) record["note"] = unit.note;
            out.push_back(std::move(record));
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    auto pad = [](std::string s, std::size_t width) {
        if (s.size() < width) s.append(width - s.size(), ' ');
        return s + " ";
    };
    std::cout << pad("NAME", 20) << pad("CATEGORY", 14) << pad("MAGNITUDE", 24)
              << pad("DIM", 18) << pad("PREFIX", 6) << "ALIASES\n";
    for (const auto& [name, unit] : entry->units) {
        std::string aliases;
        for (const std::string& a : unit.aliases) aliases += aliases.empty() ? a : ", " + a;
        std::cout << pad(unit.name, 20)
                  << pad(std::string(unit_category_name(unit.category)), 14)
                  << pad(render_magnitude(unit.value.mag(), opt), 24)
                  << pad(unit.value.dim().to_string(), 18)
                  << pad(unit.prefixable ? "yes" : "no", 6) << aliases << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qcalc: exact quantity calculus over the ISQ and the SI"};
    app.require_subcommand(1);

    options opt;
    app.add_option("--system", opt.system, "default unit system (default SI)");
    app.add_option("--digits", opt.digits, "significant digits for decimal output (default 10)")
        ->check(CLI::Range(1, 200));
    app.add_flag("--exact", opt.exact, "print exact rationals (p/q, explicit pi^k)");
    app.add_flag("--json", opt.json, "JSON output");
    app.add_option("--schemas", opt.schemas_file,
                   "JSON file with extra conversion schemas to register");

    std::string expr, dim_text, target, lhs, op_text, rhs, path, tol = "1e-6";
    std::string units_system;

    CLI::App* dim = app.add_subcommand("dim", "print the canonical dimension of an expression");
    dim->add_option("EXPR", expr, "quantity expression")->required();
    CLI::App* norm = app.add_subcommand("norm", "normalise a dimension expression");
    norm->add_option("DIMEXPR", dim_text, "dimension expression")->required();
    CLI::App* convert =
        app.add_subcommand("convert", "express a quantity as a multiple of a target unit");
    convert->add_option("EXPR", expr, "quantity expression")->required();
    convert->add_option("--to", target, "target unit expression")->required();
    CLI::App* eq = app.add_subcommand("eq", "compare two quantity expressions");
    eq->add_option("LHS", lhs, "left expression")->required();
    eq->add_option("OP", op_text, "==, ~, <= or ~=")->required();
    eq->add_option("RHS", rhs, "right expression")->required();
    eq->add_option("--tol", tol, "relative tolerance for ~= (default 1e-6)");
    CLI::App* verify = app.add_subcommand("verify", "run a .qeq assertion corpus");
    verify->add_option("FILE", path, "corpus file")->required();
    CLI::App* units = app.add_subcommand("units", "list a system's unit registry");
    units->add_option("--system", units_system, "system to list (defaults to --system)");

    for (CLI::App* sub : {dim, norm, convert, eq, verify, units}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        system_registry registry = system_registry::with_builtins();
        if (!opt.schemas_file.empty()) load_schema_file(registry, opt.schemas_file);
        if (!registry.contains(system_id{opt.system}))
            throw lookup_error("unknown system '" + opt.system + "'");

        if (dim->parsed()) return cmd_dim(expr, opt, registry);
        if (norm->parsed()) return cmd_norm(dim_text, opt);
        if (convert->parsed()) return cmd_convert(expr, target, opt, registry);
        if (eq->parsed()) return cmd_eq(lhs, op_text, rhs, tol, opt, registry);
        if (verify->parsed()) return cmd_verify(path, opt, registry);
        if (units->parsed())
            return cmd_units(units_system.empty() ? opt.system : units_system, opt, registry);
        std::cerr << "qcalc: no subcommand\n";
        return kExitUsage;
    } catch (const error& e) {
        std::cerr << "qcalc: " << e.what() << "\n";
        return kExitUsage;
    }
}
