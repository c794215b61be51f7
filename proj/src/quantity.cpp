#include "qcalc/quantity.hpp"

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

void require_same_system(const quantity& x, const quantity& y, const char* op) {
    if (x.system() != y.system())
        throw system_mismatch(std::string(op) + ": systems differ (" + x.system().name() +
                              " vs " + y.system().name() + ")");
}

}  // namespace

quantity operator*(const quantity& x, const quantity& y) {
    require_same_system(x, y, "multiply");
    return quantity(x.mag() * y.mag(), x.dim() * y.dim(), x.system());
}

quantity quantity::inverse() const {
    if (mag_.is_zero()) throw division_by_zero("invert: zero magnitude");
    return quantity(mag_.inverse(), dim_.inverse(), system_);
}

quantity operator/(const quantity& x, const quantity& y) {
    require_same_system(x, y, "divide");
    return x * y.inverse();
}

quantity operator+(const quantity& x, const quantity& y) {
    require_same_system(x, y, "add");
    if (x.dim() != y.dim())
        throw dimension_mismatch("add: dimensions differ (" + x.dim().to_string() + " vs " +
                                 y.dim().to_string() + ")");
    return quantity(x.mag() + y.mag(), x.dim(), x.system());
}

quantity operator-(const quantity& x, const quantity& y) {
    require_same_system(x, y, "subtract");
    if (x.dim() != y.dim())
        throw dimension_mismatch("subtract: dimensions differ (" + x.dim().to_string() +
                                 " vs " + y.dim().to_string() + ")");
    return quantity(x.mag() - y.mag(), x.dim(), x.system());
}

quantity quantity::pow(long long n) const {
    if (n < 0 && mag_.is_zero()) throw division_by_zero("power: zero magnitude");
    if (n < -1000000 || n > 1000000) throw arithmetic_overflow("power: exponent out of range");
    return quantity(exact_scalar::pow(mag_, n), dim_.pow(static_cast<int>(n)), system_);
}

quantity scale(const exact_scalar& factor, const quantity& x) {
    return quantity(factor * x.mag(), x.dim(), x.system());
}

bool equivalent(const quantity& x, const quantity& y) {
    require_same_system(x, y, "equivalence");
    return x.dim() == y.dim() && x.mag() == y.mag();
}

bool less_eq(const quantity& x, const quantity& y) {
    require_same_system(x, y, "order");
    return x.dim() == y.dim() && x.mag().less_eq(y.mag());
}

quantity dnorm(const quantity& x, const dim_expr& target) {
    dim_vec want = target.eval();
    if (want == x.dim()) return x;
    return quantity(exact_scalar(0), want, x.system());
}

}  // namespace qcalc
