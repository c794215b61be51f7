#pragma once

#include <compare>
#include <string>

#include "qcalc/rational.hpp"

namespace qcalc {

/// Renders a nonzero rational rounded to `significant_digits` decimal digits,
/// round-half-even. Trailing fractional zeros are trimmed; values far from 1
/// switch to scientific notation.
std::string to_decimal_string(const rational& value, int significant_digits);

/// Exact scalar magnitude: rational coefficient times an integer power of pi.
///
/// This is closed under multiplication, division and integer powers, and
/// under addition of like pi-powers, which is exactly what the unit ontology
/// needs (pi enters only through degree and parsec). Because pi is
/// transcendental the representation is canonical, so equality is structural.
class exact_scalar {
public:
    exact_scalar() = default;
    exact_scalar(long long value) : coeff_(value) {}
    exact_scalar(rational coeff) : coeff_(std::move(coeff)) {}
    exact_scalar(rational coeff, int pi_exponent);

    static exact_scalar pi(int exponent = 1) { return exact_scalar(rational(1), exponent); }
    static exact_scalar from_decimal(std::string_view text) {
        return exact_scalar(rational::from_string(text));
    }

    const rational& coeff() const { return coeff_; }
    int pi_exponent() const { return pi_exp_; }
    bool is_zero() const { return coeff_.is_zero(); }
    int sign() const { return coeff_.sign(); }

    friend exact_scalar operator+(const exact_scalar& a, const exact_scalar& b);
    friend exact_scalar operator-(const exact_scalar& a, const exact_scalar& b);
    friend exact_scalar operator*(const exact_scalar& a, const exact_scalar& b);
    friend exact_scalar operator/(const exact_scalar& a, const exact_scalar& b);
    exact_scalar operator-() const;
    exact_scalar inverse() const;
    static exact_scalar pow(const exact_scalar& base, long long exponent);

    friend bool operator==(const exact_scalar& a, const exact_scalar& b) = default;

    /// Total order on the represented reals. Equality is structural; strict
    /// comparisons refine rational pi-intervals at 64, 128 and 256 digits and
    /// throw precision_exhausted if those fail to separate the values.
    std::strong_ordering compare(const exact_scalar& other) const;
    bool less_eq(const exact_scalar& other) const {
        return compare(other) != std::strong_ordering::greater;
    }

    /// Rational approximation of the represented value, using pi truncated to
    /// `digits` decimal digits. Exact when pi_exponent() is zero.
    rational approx(int digits) const;

    /// Round-half-even decimal rendering to `significant_digits` digits.
    std::string to_decimal(int significant_digits) const;
    /// Exact rendering: "p/q" plus an explicit " * pi^k" factor when k != 0.
    std::string to_exact_string() const;

    /// floor(pi * 10^digits) / 10^digits; `digits` up to 320.
    static rational pi_lower_bound(int digits);
    static rational pi_upper_bound(int digits);

private:
    rational coeff_;
    int pi_exp_ = 0;
};

}  // namespace qcalc
