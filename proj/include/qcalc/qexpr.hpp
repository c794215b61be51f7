#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "qcalc/systems.hpp"

namespace qcalc {

/// Surface-syntax tree for quantity expressions:
///
///   expr   := term (('*' | '/') term)*
///   term   := factor ('^' int)?
///   factor := number | unit | '(' expr ')'
///           | 'to' '[' SYSTEM ']' '(' expr ')'
///           | 'dnorm' '[' dimexpr ']' '(' expr ')'
///
/// A number directly followed by a unit name is scaling ("20 metre"), and
/// binds tighter than '*' and '/'; an exponent after the juxtaposed unit
/// belongs to the unit ("277.421 inch^3" is 277.421 cubic inches). Numbers
/// are decimal literals (optionally signed, optional exponent); fractions are
/// ordinary division and stay exact. 'pi' is a dimensionless builtin. Unit
/// names may carry a system qualifier ("CGS:centimetre") and are resolved,
/// including prefix splitting, against that system's registry at parse time.
class qexpr {
public:
    enum class kind { number, unit, mul, div, pow, convert, dnorm_cast };

    qexpr() : qexpr(number(exact_scalar(0), system_id{})) {}

    static qexpr number(exact_scalar value, system_id default_system);
    static qexpr unit(system_id sys, bool qualified, std::string spelled,
                      std::string canonical, int prefix_exponent10);
    static qexpr mul(qexpr lhs, qexpr rhs);
    static qexpr div(qexpr lhs, qexpr rhs);
    static qexpr pow(qexpr operand, long long exponent);
    static qexpr convert(qexpr operand, system_id target);
    static qexpr dnorm_cast(qexpr operand, dim_expr target);

    kind node_kind() const;
    const exact_scalar& number_value() const;
    const system_id& system() const;        // number default / unit system / convert target
    const std::string& unit_spelling() const;
    const std::string& unit_canonical() const;
    bool unit_qualified() const;
    int unit_prefix_exponent10() const;
    qexpr lhs() const;
    qexpr rhs() const;
    qexpr operand() const;
    long long exponent() const;
    const dim_expr& dnorm_target() const;

    friend bool operator==(const qexpr& a, const qexpr& b);

    /// Renders to the surface syntax; parsing the result yields a
    /// structurally equal tree.
    std::string to_string() const;

private:
    struct node;
    explicit qexpr(std::shared_ptr<const node> n) : node_(std::move(n)) {}
    std::shared_ptr<const node> node_;
};

/// Parses a quantity expression. Unit and system names are validated against
/// the registry; errors carry the offending position.
qexpr parse_quantity_expr(std::string_view text, const system_id& default_system,
                          const system_registry& registry = system_registry::builtins());

/// Bottom-up evaluation. Conversion nodes go through qmc, dnorm nodes through
/// dnorm; bare numbers scale whatever they multiply, so "30 BIS:pound" works
/// from any default system.
quantity eval(const qexpr& expr, const system_registry& registry = system_registry::builtins());

}  // namespace qcalc
