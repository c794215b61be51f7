#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace qcalc {

/// The seven ISQ base quantities, in the canonical order. The enumerator
/// values are the vector indices.
enum class base_quantity : int {
    length = 0,
    mass = 1,
    time = 2,
    current = 3,
    temperature = 4,
    amount = 5,
    intensity = 6,
};

inline constexpr int base_quantity_count = 7;

inline constexpr std::array<base_quantity, base_quantity_count> all_base_quantities = {
    base_quantity::length,      base_quantity::mass,   base_quantity::time,
    base_quantity::current,     base_quantity::temperature,
    base_quantity::amount,      base_quantity::intensity,
};

/// ASCII spelling used by the dimension grammar: L M T I Theta N J.
std::string_view base_quantity_symbol(base_quantity q);

/// Exponent vector over the seven base quantities. Forms an abelian group
/// under operator* / inverse(); exponent arithmetic is overflow-checked.
class dim_vec {
public:
    dim_vec() = default;

    static dim_vec one() { return dim_vec(); }
    static dim_vec base(base_quantity q);

    /// Builds a vector from a 7-element exponent list; any other length
    /// yields the null dimension (the codec's total fallback).
    static dim_vec from_list(std::span<const int> exponents);
    /// Strict variant: throws qcalc::error unless exactly 7 exponents.
    static dim_vec from_list_strict(std::span<const int> exponents);

    std::array<int, base_quantity_count> to_list() const { return exponents_; }
    int exponent(base_quantity q) const { return exponents_[static_cast<std::size_t>(q)]; }

    friend dim_vec operator*(const dim_vec& a, const dim_vec& b);
    friend dim_vec operator/(const dim_vec& a, const dim_vec& b);
    dim_vec inverse() const;
    dim_vec pow(int n) const;

    /// Exactly one exponent is 1 and the rest are 0.
    bool is_base() const;
    bool is_dimensionless() const { return *this == dim_vec(); }

    friend bool operator==(const dim_vec& a, const dim_vec& b) = default;

    /// Canonical rendering, e.g. "L^-2*T^4*I^2"; "1" when dimensionless.
    std::string to_string() const;

private:
    std::array<int, base_quantity_count> exponents_{};
};

/// Syntax tree of dimension expressions: base symbols, 1, products, inverses
/// and integer powers. Immutable; cheap to copy.
class dim_expr {
public:
    enum class kind { base, one, times, inv, pow };

    dim_expr() : dim_expr(one()) {}

    static dim_expr base(base_quantity q);
    static dim_expr one();
    static dim_expr times(dim_expr lhs, dim_expr rhs);
    static dim_expr inv(dim_expr operand);
    static dim_expr pow(dim_expr operand, int exponent);

    kind node_kind() const;
    base_quantity base_symbol() const;
    dim_expr lhs() const;
    dim_expr rhs() const;
    dim_expr operand() const;
    int exponent() const;

    /// Homomorphic evaluation into the dimension-vector group.
    dim_vec eval() const;

    /// Canonical form: ordered product L^a*M^b*...*J^g with zero exponents
    /// omitted, or 1 when everything cancels. Evaluation-preserving, and two
    /// expressions normalise to structurally equal trees iff they evaluate to
    /// the same vector.
    dim_expr normalise() const;

    /// Structural equality.
    friend bool operator==(const dim_expr& a, const dim_expr& b);

    std::string to_string() const;

    /// Parses the textual dimension syntax: symbols L M T I Theta N J,
    /// operators * / ^, parentheses, and 1 for the null dimension.
    static dim_expr parse(std::string_view text);

private:
    struct node;
    explicit dim_expr(std::shared_ptr<const node> n) : node_(std::move(n)) {}
    std::shared_ptr<const node> node_;
};

}  // namespace qcalc
