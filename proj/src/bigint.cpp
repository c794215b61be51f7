#include "qcalc/bigint.hpp"

#include <algorithm>
#include <cstdlib>

#include "qcalc/errors.hpp"

namespace qcalc {

bigint::bigint(long long value) {
    if (value == 0) return;
    sign_ = value < 0 ? -1 : 1;
    // Avoid overflow on LLONG_MIN by working in unsigned space.
    unsigned long long mag = value < 0 ? 0ull - static_cast<unsigned long long>(value)
                                       : static_cast<unsigned long long>(value);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag % kBase));
        mag /= kBase;
    }
}

void bigint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

bigint bigint::from_string(std::string_view text) {
    std::size_t i = 0;
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') sign = -1;
        ++i;
    }
    if (i >= text.size())
        throw error("bigint: empty numeral '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9')
            throw error("bigint: invalid digit in '" + std::string(text) + "'");

    bigint out;
    std::size_t ndigits = text.size() - i;
    out.limbs_.reserve(ndigits / kBaseDigits + 1);
    std::size_t pos = text.size();
    while (pos > i) {
        std::size_t chunk = std::min<std::size_t>(kBaseDigits, pos - i);
        std::uint32_t limb = 0;
        for (std::size_t j = pos - chunk; j < pos; ++j)
            limb = limb * 10 + static_cast<std::uint32_t>(text[j] - '0');
        out.limbs_.push_back(limb);
        pos -= chunk;
    }
    out.sign_ = sign;
    out.trim();
    return out;
}

bigint bigint::pow10(std::size_t k) {
    bigint out;
    out.sign_ = 1;
    out.limbs_.assign(k / kBaseDigits, 0);
    std::uint32_t top = 1;
    for (std::size_t i = 0; i < k % kBaseDigits; ++i) top *= 10;
    out.limbs_.push_back(top);
    return out;
}

bigint bigint::abs() const {
    bigint out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

bool bigint::is_odd() const {
    return !limbs_.empty() && (limbs_[0] & 1u) != 0;
}

std::size_t bigint::digit_count() const {
    if (is_zero()) return 1;
    std::size_t count = (limbs_.size() - 1) * kBaseDigits;
    std::uint32_t top = limbs_.back();
    while (top != 0) {
        ++count;
        top /= 10;
    }
    return count;
}

std::string bigint::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    out.reserve(limbs_.size() * kBaseDigits + 1);
    if (sign_ < 0) out.push_back('-');
    out += std::to_string(limbs_.back());
    char buf[16];
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
        out += buf;
    }
    return out;
}

int bigint::compare_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> bigint::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> out;
    out.reserve(hi.size() + 1);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint32_t sum = hi[i] + carry + (i < lo.size() ? lo[i] : 0);
        if (sum >= kBase) {
            sum -= kBase;
            carry = 1;
        } else {
            carry = 0;
        }
        out.push_back(sum);
    }
    if (carry) out.push_back(carry);
    return out;
}

std::vector<std::uint32_t> bigint::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                           (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(cur));
    }
    return out;
}

std::vector<std::uint32_t> bigint::mul_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] +
                                static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        std::size_t k = i + b.size();
        while (carry != 0) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
            ++k;
        }
    }
    return out;
}

std::vector<std::uint32_t> bigint::mul_small(const std::vector<std::uint32_t>& a,
                                             std::uint32_t m) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + 1);
    std::uint64_t carry = 0;
    for (std::uint32_t limb : a) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
        out.push_back(static_cast<std::uint32_t>(cur % kBase));
        carry = cur / kBase;
    }
    while (carry != 0) {
        out.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

bigint bigint::operator-() const {
    bigint out = *this;
    out.sign_ = -out.sign_;
    return out;
}

bigint operator+(const bigint& a, const bigint& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    bigint out;
    if (a.sign_ == b.sign_) {
        out.sign_ = a.sign_;
        out.limbs_ = bigint::add_magnitude(a.limbs_, b.limbs_);
        return out;
    }
    int cmp = bigint::compare_magnitude(a.limbs_, b.limbs_);
    if (cmp == 0) return bigint();
    if (cmp > 0) {
        out.sign_ = a.sign_;
        out.limbs_ = bigint::sub_magnitude(a.limbs_, b.limbs_);
    } else {
        out.sign_ = b.sign_;
        out.limbs_ = bigint::sub_magnitude(b.limbs_, a.limbs_);
    }
    out.trim();
    return out;
}

bigint operator-(const bigint& a, const bigint& b) { return a + (-b); }

bigint operator*(const bigint& a, const bigint& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return bigint();
    bigint out;
    out.sign_ = a.sign_ * b.sign_;
    out.limbs_ = bigint::mul_magnitude(a.limbs_, b.limbs_);
    out.trim();
    return out;
}

std::pair<bigint, bigint> bigint::divmod(const bigint& a, const bigint& b) {
    if (b.is_zero()) throw division_by_zero("bigint: division by zero");
    if (a.is_zero()) return {bigint(), bigint()};
    if (compare_magnitude(a.limbs_, b.limbs_) < 0) return {bigint(), a};

    // Schoolbook long division on magnitudes, one base-10^9 digit at a time.
    // The quotient digit is found by binary search, which trades speed we do
    // not need for estimation code we would have to get right.
    std::vector<std::uint32_t> quotient(a.limbs_.size(), 0);
    std::vector<std::uint32_t> rem;  // little-endian running remainder
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        rem.insert(rem.begin(), a.limbs_[i]);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        std::uint32_t lo = 0, hi = kBase - 1, digit = 0;
        while (lo <= hi) {
            std::uint32_t mid = lo + (hi - lo) / 2;
            if (compare_magnitude(mul_small(b.limbs_, mid), rem) <= 0) {
                digit = mid;
                if (mid == kBase - 1) break;
                lo = mid + 1;
            } else {
                if (mid == 0) break;
                hi = mid - 1;
            }
        }
        quotient[i] = digit;
        if (digit != 0) rem = sub_magnitude(rem, mul_small(b.limbs_, digit));
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }

    bigint q, r;
    q.limbs_ = std::move(quotient);
    q.sign_ = a.sign_ * b.sign_;
    q.trim();
    r.limbs_ = std::move(rem);
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    return {q, r};
}

bigint operator/(const bigint& a, const bigint& b) { return bigint::divmod(a, b).first; }
bigint operator%(const bigint& a, const bigint& b) { return bigint::divmod(a, b).second; }

bigint& bigint::operator+=(const bigint& o) { return *this = *this + o; }
bigint& bigint::operator-=(const bigint& o) { return *this = *this - o; }
bigint& bigint::operator*=(const bigint& o) { return *this = *this * o; }
bigint& bigint::operator/=(const bigint& o) { return *this = *this / o; }

bigint bigint::pow(const bigint& base, unsigned long long exponent) {
    bigint result(1);
    bigint acc = base;
    while (exponent != 0) {
        if (exponent & 1ull) result *= acc;
        exponent >>= 1;
        if (exponent != 0) acc *= acc;
    }
    return result;
}

bigint bigint::gcd(const bigint& a, const bigint& b) {
    bigint x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        bigint r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::strong_ordering bigint::operator<=>(const bigint& other) const {
    if (sign_ != other.sign_)
        return sign_ < other.sign_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int cmp = compare_magnitude(limbs_, other.limbs_) * sign_;
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace qcalc
