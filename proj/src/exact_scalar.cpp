#include "qcalc/exact_scalar.hpp"

#include <array>
#include <cstdlib>
#include <utility>

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

// 320 fractional digits of pi. test_scalar re-derives these with Machin's
// formula, so a typo here cannot survive the test suite.
constexpr const char* kPiFractionDigits =
    "14159265358979323846"
    "26433832795028841971"
    "69399375105820974944"
    "59230781640628620899"
    "86280348253421170679"
    "82148086513282306647"
    "09384460955058223172"
    "53594081284811174502"
    "84102701938521105559"
    "64462294895493038196"
    "44288109756659334461"
    "28475648233786783165"
    "27120190914564856692"
    "34603486104543266482"
    "13393607260249141273"
    "72458700660631558817";

constexpr int kMaxPiDigits = 320;
constexpr std::array<int, 3> kComparePrecisions = {64, 128, 256};

bigint pi_scaled(int digits) {
    std::string text = "3";
    text.append(kPiFractionDigits, kPiFractionDigits + digits);
    return bigint::from_string(text);
}

struct interval {
    rational lo;
    rational hi;
};

// Encloses coeff * pi^k given an enclosure of pi.
interval enclose(const rational& coeff, int k, const rational& pi_lo, const rational& pi_hi) {
    if (k == 0) return {coeff, coeff};
    rational plo, phi;
    if (k > 0) {
        plo = rational::pow(pi_lo, k);
        phi = rational::pow(pi_hi, k);
    } else {
        plo = rational::pow(pi_hi, k);
        phi = rational::pow(pi_lo, k);
    }
    if (coeff.sign() >= 0) return {coeff * plo, coeff * phi};
    return {coeff * phi, coeff * plo};
}

}  // namespace

exact_scalar::exact_scalar(rational coeff, int pi_exponent)
    : coeff_(std::move(coeff)), pi_exp_(pi_exponent) {
    if (coeff_.is_zero()) pi_exp_ = 0;
}

exact_scalar operator+(const exact_scalar& a, const exact_scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.pi_exp_ != b.pi_exp_)
        throw pi_closure_error("cannot add scalars with pi^" + std::to_string(a.pi_exp_) +
                               " and pi^" + std::to_string(b.pi_exp_));
    return exact_scalar(a.coeff_ + b.coeff_, a.pi_exp_);
}

exact_scalar operator-(const exact_scalar& a, const exact_scalar& b) { return a + (-b); }

exact_scalar operator*(const exact_scalar& a, const exact_scalar& b) {
    return exact_scalar(a.coeff_ * b.coeff_, a.pi_exp_ + b.pi_exp_);
}

exact_scalar operator/(const exact_scalar& a, const exact_scalar& b) {
    return a * b.inverse();
}

exact_scalar exact_scalar::operator-() const { return exact_scalar(-coeff_, pi_exp_); }

exact_scalar exact_scalar::inverse() const {
    if (is_zero()) throw division_by_zero("scalar: division by zero");
    return exact_scalar(coeff_.reciprocal(), -pi_exp_);
}

exact_scalar exact_scalar::pow(const exact_scalar& base, long long exponent) {
    if (exponent == 0) return exact_scalar(1);
    if (base.is_zero() && exponent < 0)
        throw division_by_zero("scalar: zero raised to a negative power");
    long long pe = base.pi_exp_ * exponent;
    if (pe > 1000000 || pe < -1000000)
        throw arithmetic_overflow("scalar: pi exponent out of range");
    return exact_scalar(rational::pow(base.coeff_, exponent), static_cast<int>(pe));
}

std::strong_ordering exact_scalar::compare(const exact_scalar& other) const {
    if (*this == other) return std::strong_ordering::equal;
    // Sign of the value is the sign of the coefficient (pi^k > 0).
    if (sign() != other.sign())
        return sign() < other.sign() ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
    if (pi_exp_ == 0 && other.pi_exp_ == 0) return coeff_ <=> other.coeff_;

    for (int digits : kComparePrecisions) {
        rational lo = pi_lower_bound(digits), hi = pi_upper_bound(digits);
        interval a = enclose(coeff_, pi_exp_, lo, hi);
        interval b = enclose(other.coeff_, other.pi_exp_, lo, hi);
        if (a.hi < b.lo) return std::strong_ordering::less;
        if (b.hi < a.lo) return std::strong_ordering::greater;
    }
    throw precision_exhausted("scalar comparison undecided at 256 digits");
}

rational exact_scalar::approx(int digits) const {
    if (pi_exp_ == 0) return coeff_;
    return coeff_ * rational::pow(pi_lower_bound(digits), pi_exp_);
}

rational exact_scalar::pi_lower_bound(int digits) {
    if (digits < 1 || digits > kMaxPiDigits)
        throw error("pi bound: unsupported precision " + std::to_string(digits));
    return rational(pi_scaled(digits), bigint::pow10(static_cast<std::size_t>(digits)));
}

rational exact_scalar::pi_upper_bound(int digits) {
    if (digits < 1 || digits > kMaxPiDigits)
        throw error("pi bound: unsupported precision " + std::to_string(digits));
    return rational(pi_scaled(digits) + bigint(1),
                    bigint::pow10(static_cast<std::size_t>(digits)));
}

std::string to_decimal_string(const rational& value, int significant_digits) {
    if (significant_digits < 1) throw error("rendering needs at least 1 digit");
    if (value.is_zero()) return "0";

    const bigint& n = value.num().abs();
    const bigint& d = value.den();

    // Decimal exponent e: the unique integer with 10^e <= |value| < 10^(e+1).
    long long e = static_cast<long long>(n.digit_count()) -
                  static_cast<long long>(d.digit_count());
    auto at_least = [&](long long exp) {
        // |value| >= 10^exp  <=>  n * 10^(-exp) >= d (exp <= 0), n >= d * 10^exp
        if (exp >= 0) return n >= d * bigint::pow10(static_cast<std::size_t>(exp));
        return n * bigint::pow10(static_cast<std::size_t>(-exp)) >= d;
    };
    while (!at_least(e)) --e;
    while (at_least(e + 1)) ++e;

    // q = round_half_even(|value| * 10^(sig-1-e)), an integer of sig digits.
    long long shift = significant_digits - 1 - e;
    bigint sn = n, sd = d;
    if (shift >= 0)
        sn = sn * bigint::pow10(static_cast<std::size_t>(shift));
    else
        sd = sd * bigint::pow10(static_cast<std::size_t>(-shift));
    auto [q, rem] = bigint::divmod(sn, sd);
    bigint twice = rem + rem;
    if (twice > sd || (twice == sd && q.is_odd())) q += bigint(1);
    if (q == bigint::pow10(static_cast<std::size_t>(significant_digits))) {
        q = bigint::pow10(static_cast<std::size_t>(significant_digits - 1));
        ++e;
    }
    std::string digits = q.to_string();

    std::string body;
    if (e >= -5 && e <= 20) {
        if (e >= 0) {
            std::string intpart, frac;
            if (static_cast<std::size_t>(e) + 1 >= digits.size()) {
                intpart = digits + std::string(static_cast<std::size_t>(e) + 1 - digits.size(), '0');
            } else {
                intpart = digits.substr(0, static_cast<std::size_t>(e) + 1);
                frac = digits.substr(static_cast<std::size_t>(e) + 1);
            }
            while (!frac.empty() && frac.back() == '0') frac.pop_back();
            body = frac.empty() ? intpart : intpart + "." + frac;
        } else {
            while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
            body = "0." + std::string(static_cast<std::size_t>(-e) - 1, '0') + digits;
        }
    } else {
        std::string head = digits.substr(0, 1), tail = digits.substr(1);
        while (!tail.empty() && tail.back() == '0') tail.pop_back();
        body = tail.empty() ? head : head + "." + tail;
        body += "e" + std::to_string(e);
    }
    return value.sign() < 0 ? "-" + body : body;
}

std::string exact_scalar::to_decimal(int significant_digits) const {
    if (is_zero()) return "0";
    if (pi_exp_ == 0) return to_decimal_string(coeff_, significant_digits);
    int work = significant_digits + 40;
    if (work > kMaxPiDigits) work = kMaxPiDigits;
    return to_decimal_string(approx(work), significant_digits);
}

std::string exact_scalar::to_exact_string() const {
    if (pi_exp_ == 0) return coeff_.to_string();
    return coeff_.to_string() + " * pi^" + std::to_string(pi_exp_);
}

}  // namespace qcalc
