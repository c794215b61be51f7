#pragma once

#include <array>
#include <utility>

#include "qcalc/errors.hpp"
#include "qcalc/quantity.hpp"

namespace qcalc {

/// Statically checked quantity: the dimension exponents live in the type, so
/// adding a length to a mass refuses to compile and multiplication carries
/// its dimension arithmetic in the signature. Everything delegates to the
/// runtime quantity operations; this wrapper adds no semantics of its own.
template <int L, int M, int T, int I, int Th, int N, int J>
class typed_quantity {
public:
    static constexpr std::array<int, base_quantity_count> exponents() {
        return {L, M, T, I, Th, N, J};
    }
    static dim_vec dim() {
        auto e = exponents();
        return dim_vec::from_list(e);
    }

    typed_quantity(exact_scalar magnitude, system_id sys)
        : value_(std::move(magnitude), dim(), std::move(sys)) {}

    /// Checked injection from a runtime quantity.
    static typed_quantity checked(quantity q) {
        if (q.dim() != dim())
            throw dimension_mismatch("typed_quantity: runtime dimension " +
                                     q.dim().to_string() + " does not match " +
                                     dim().to_string());
        return typed_quantity(q.mag(), q.system());
    }

    const quantity& untyped() const { return value_; }
    const exact_scalar& mag() const { return value_.mag(); }
    const system_id& system() const { return value_.system(); }

    friend typed_quantity operator+(const typed_quantity& a, const typed_quantity& b) {
        return checked(a.value_ + b.value_);
    }
    friend typed_quantity operator-(const typed_quantity& a, const typed_quantity& b) {
        return checked(a.value_ - b.value_);
    }

    template <int L2, int M2, int T2, int I2, int Th2, int N2, int J2>
    friend auto operator*(const typed_quantity& a,
                          const typed_quantity<L2, M2, T2, I2, Th2, N2, J2>& b) {
        return typed_quantity<L + L2, M + M2, T + T2, I + I2, Th + Th2, N + N2,
                              J + J2>::checked(a.value_ * b.untyped());
    }

    template <int L2, int M2, int T2, int I2, int Th2, int N2, int J2>
    friend auto operator/(const typed_quantity& a,
                          const typed_quantity<L2, M2, T2, I2, Th2, N2, J2>& b) {
        return typed_quantity<L - L2, M - M2, T - T2, I - I2, Th - Th2, N - N2,
                              J - J2>::checked(a.value_ / b.untyped());
    }

    auto inverse() const {
        return typed_quantity<-L, -M, -T, -I, -Th, -N, -J>::checked(value_.inverse());
    }

    friend typed_quantity scale(const exact_scalar& n, const typed_quantity& x) {
        return checked(qcalc::scale(n, x.value_));
    }

    friend bool operator==(const typed_quantity& a, const typed_quantity& b) {
        return a.value_ == b.value_;
    }
    friend bool less_eq(const typed_quantity& a, const typed_quantity& b) {
        return qcalc::less_eq(a.value_, b.value_);
    }

private:
    quantity value_;
};

using typed_dimensionless = typed_quantity<0, 0, 0, 0, 0, 0, 0>;
using typed_length = typed_quantity<1, 0, 0, 0, 0, 0, 0>;
using typed_mass = typed_quantity<0, 1, 0, 0, 0, 0, 0>;
using typed_time = typed_quantity<0, 0, 1, 0, 0, 0, 0>;
using typed_velocity = typed_quantity<1, 0, -1, 0, 0, 0, 0>;

}  // namespace qcalc
