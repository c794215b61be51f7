#pragma once

#include <compare>
#include <string>
#include <utility>

#include "qcalc/dimension.hpp"
#include "qcalc/exact_scalar.hpp"

namespace qcalc {

/// Tag identifying the unit system a quantity is measured in. Plain value
/// type; registration is enforced where names enter the engine (unit
/// construction, parsing, conversion lookups).
class system_id {
public:
    system_id() = default;
    explicit system_id(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    friend bool operator==(const system_id& a, const system_id& b) = default;
    friend auto operator<=>(const system_id& a, const system_id& b) = default;

private:
    std::string name_;
};

/// A measured quantity: exact magnitude, dimension vector, unit system.
/// Immutable. Every operation below preserves the invariant that the stored
/// dimension is the dimension of the value it describes.
class quantity {
public:
    quantity(exact_scalar magnitude, dim_vec dimension, system_id system)
        : mag_(std::move(magnitude)), dim_(dimension), system_(std::move(system)) {}

    /// Dimensionless 0 and 1 in the given system.
    static quantity zero(const system_id& sys) { return quantity(exact_scalar(0), dim_vec::one(), sys); }
    static quantity one(const system_id& sys) { return quantity(exact_scalar(1), dim_vec::one(), sys); }

    const exact_scalar& mag() const { return mag_; }
    const dim_vec& dim() const { return dim_; }
    const system_id& system() const { return system_; }

    /// Multiplies magnitudes and dimensions. Requires equal systems.
    friend quantity operator*(const quantity& x, const quantity& y);
    /// Componentwise inverse; requires nonzero magnitude.
    quantity inverse() const;
    friend quantity operator/(const quantity& x, const quantity& y);

    /// Partial: requires equal systems and equal dimensions.
    friend quantity operator+(const quantity& x, const quantity& y);
    friend quantity operator-(const quantity& x, const quantity& y);

    /// Magnitude to the n, dimension exponents scaled by n.
    quantity pow(long long n) const;

    /// Exact structural equality: same magnitude, dimension and system.
    friend bool operator==(const quantity& x, const quantity& y) = default;

private:
    exact_scalar mag_;
    dim_vec dim_;
    system_id system_;
};

/// Scales the magnitude without touching dimension or system.
quantity scale(const exact_scalar& factor, const quantity& x);

/// Heterogeneous equivalence: equal magnitude and equal dimension. Throws
/// system_mismatch when the operands live in different systems.
bool equivalent(const quantity& x, const quantity& y);

/// Order: magnitude order conjoined with dimension equality; a dimension
/// mismatch yields false, not an error. Throws system_mismatch.
bool less_eq(const quantity& x, const quantity& y);

/// Dimension coercion: if `target` evaluates to x's dimension the value is
/// returned unchanged (relabelled with the normalised target); otherwise a
/// zero-magnitude quantity of the target dimension. Total by design.
quantity dnorm(const quantity& x, const dim_expr& target);

}  // namespace qcalc
