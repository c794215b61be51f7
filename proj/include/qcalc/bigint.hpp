#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcalc {

/// Arbitrary-precision signed integer.
///
/// Sign-magnitude representation with little-endian base-10^9 limbs, which
/// keeps decimal I/O cheap. Magnitudes in this project stay small (a few
/// hundred digits), so all algorithms are the schoolbook ones.
class bigint {
public:
    bigint() = default;
    bigint(long long value);

    /// Parses an optionally signed decimal string. Throws qcalc::error on
    /// anything that is not [+-]?[0-9]+.
    static bigint from_string(std::string_view text);
    static bigint pow10(std::size_t k);

    bool is_zero() const { return sign_ == 0; }
    /// -1, 0 or +1.
    int sign() const { return sign_; }
    bigint abs() const;
    bool is_odd() const;

    /// Number of decimal digits of |x|; 1 for zero.
    std::size_t digit_count() const;

    std::string to_string() const;

    bigint operator-() const;
    friend bigint operator+(const bigint& a, const bigint& b);
    friend bigint operator-(const bigint& a, const bigint& b);
    friend bigint operator*(const bigint& a, const bigint& b);
    /// Quotient truncated toward zero; throws division_by_zero.
    friend bigint operator/(const bigint& a, const bigint& b);
    /// Remainder with the sign of the dividend.
    friend bigint operator%(const bigint& a, const bigint& b);

    bigint& operator+=(const bigint& o);
    bigint& operator-=(const bigint& o);
    bigint& operator*=(const bigint& o);
    bigint& operator/=(const bigint& o);

    /// (quotient, remainder) with a == q*b + r and |r| < |b|.
    static std::pair<bigint, bigint> divmod(const bigint& a, const bigint& b);
    static bigint pow(const bigint& base, unsigned long long exponent);
    static bigint gcd(const bigint& a, const bigint& b);

    friend bool operator==(const bigint& a, const bigint& b) = default;
    std::strong_ordering operator<=>(const bigint& other) const;

private:
    static constexpr std::uint32_t kBase = 1000000000u;
    static constexpr int kBaseDigits = 9;

    // Invariants: no leading zero limb; limbs_ empty iff sign_ == 0.
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    void trim();
    static int compare_magnitude(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_small(const std::vector<std::uint32_t>& a,
                                                std::uint32_t m);
};

}  // namespace qcalc
