#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "qcalc/bigint.hpp"

namespace qcalc {

/// Exact rational number. Always kept reduced with a positive denominator;
/// zero is canonically 0/1.
class rational {
public:
    rational() : num_(0), den_(1) {}
    rational(long long value) : num_(value), den_(1) {}
    rational(bigint numerator, bigint denominator);

    /// Accepts integers ("42"), fractions ("9/7"), and decimal literals with
    /// an optional exponent ("0.9144", "6.62607015e-34"). Decimals convert
    /// exactly, never through floating point.
    static rational from_string(std::string_view text);

    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == bigint(1); }
    int sign() const { return num_.sign(); }
    rational abs() const;
    rational reciprocal() const;

    friend rational operator+(const rational& a, const rational& b);
    friend rational operator-(const rational& a, const rational& b);
    friend rational operator*(const rational& a, const rational& b);
    friend rational operator/(const rational& a, const rational& b);
    rational operator-() const;
    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    /// Integer power; negative exponents require a nonzero base.
    static rational pow(const rational& base, long long exponent);

    friend bool operator==(const rational& a, const rational& b) = default;
    std::strong_ordering operator<=>(const rational& other) const;

    /// "p" or "p/q".
    std::string to_string() const;

private:
    struct raw_tag {};
    rational(bigint n, bigint d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize();

    bigint num_;
    bigint den_;
};

}  // namespace qcalc
