#include "qcalc/rational.hpp"

#include <utility>

#include "qcalc/errors.hpp"

namespace qcalc {

rational::rational(bigint numerator, bigint denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw division_by_zero("rational: zero denominator");
    normalize();
}

void rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = bigint(1);
        return;
    }
    bigint g = bigint::gcd(num_, den_);
    if (g != bigint(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

rational rational::from_string(std::string_view text) {
    if (text.empty()) throw error("rational: empty numeral");

    std::size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        if (text.find('/', slash + 1) != std::string_view::npos ||
            text.find('.') != std::string_view::npos ||
            text.find_first_of("eE") != std::string_view::npos)
            throw error("rational: malformed fraction '" + std::string(text) + "'");
        return rational(bigint::from_string(text.substr(0, slash)),
                        bigint::from_string(text.substr(slash + 1)));
    }

    // Decimal form: [sign] digits [. digits] [ (e|E) [sign] digits ]
    std::string_view mantissa = text;
    long long exponent10 = 0;
    std::size_t epos = text.find_first_of("eE");
    if (epos != std::string_view::npos) {
        std::string_view exp = text.substr(epos + 1);
        if (exp.empty()) throw error("rational: malformed exponent in '" + std::string(text) + "'");
        bigint e = bigint::from_string(exp);
        if (e.digit_count() > 6)
            throw error("rational: exponent out of range in '" + std::string(text) + "'");
        exponent10 = std::stoll(e.to_string());
        mantissa = text.substr(0, epos);
    }

    std::string digits;
    std::size_t frac_digits = 0;
    bool seen_point = false, seen_digit = false;
    std::size_t i = 0;
    if (i < mantissa.size() && (mantissa[i] == '+' || mantissa[i] == '-')) {
        if (mantissa[i] == '-') digits.push_back('-');
        ++i;
    }
    for (; i < mantissa.size(); ++i) {
        char c = mantissa[i];
        if (c == '.') {
            if (seen_point) throw error("rational: malformed numeral '" + std::string(text) + "'");
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) ++frac_digits;
        } else {
            throw error("rational: malformed numeral '" + std::string(text) + "'");
        }
    }
    if (!seen_digit) throw error("rational: malformed numeral '" + std::string(text) + "'");

    bigint n = bigint::from_string(digits);
    long long net = exponent10 - static_cast<long long>(frac_digits);
    if (net >= 0)
        return rational(n * bigint::pow10(static_cast<std::size_t>(net)), bigint(1));
    return rational(std::move(n), bigint::pow10(static_cast<std::size_t>(-net)));
}

rational rational::abs() const { return rational(num_.abs(), den_, raw_tag{}); }

rational rational::reciprocal() const {
    if (is_zero()) throw division_by_zero("rational: reciprocal of zero");
    rational out(den_, num_, raw_tag{});
    if (out.den_.sign() < 0) {
        out.num_ = -out.num_;
        out.den_ = -out.den_;
    }
    return out;
}

rational operator+(const rational& a, const rational& b) {
    return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

rational operator-(const rational& a, const rational& b) {
    return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

rational operator*(const rational& a, const rational& b) {
    return rational(a.num_ * b.num_, a.den_ * b.den_);
}

rational operator/(const rational& a, const rational& b) {
    if (b.is_zero()) throw division_by_zero("rational: division by zero");
    return rational(a.num_ * b.den_, a.den_ * b.num_);
}

rational rational::operator-() const { return rational(-num_, den_, raw_tag{}); }

rational rational::pow(const rational& base, long long exponent) {
    if (exponent == 0) return rational(1);
    bool invert = exponent < 0;
    if (invert && base.is_zero())
        throw division_by_zero("rational: zero raised to a negative power");
    unsigned long long e = invert ? 0ull - static_cast<unsigned long long>(exponent)
                                  : static_cast<unsigned long long>(exponent);
    rational out(bigint::pow(base.num_, e), bigint::pow(base.den_, e), raw_tag{});
    return invert ? out.reciprocal() : out;
}

std::strong_ordering rational::operator<=>(const rational& other) const {
    return (num_ * other.den_) <=> (other.num_ * den_);
}

std::string rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace qcalc
