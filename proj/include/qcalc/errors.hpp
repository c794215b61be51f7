#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcalc {

// Base class for everything this library throws.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Exponent arithmetic left the machine-integer range.
struct arithmetic_overflow : error {
    explicit arithmetic_overflow(const std::string& what) : error(what) {}
};

struct division_by_zero : error {
    explicit division_by_zero(const std::string& what) : error(what) {}
};

// Sum of two scalars with different nonzero powers of pi; the result would
// leave the rational*pi^k form.
struct pi_closure_error : error {
    explicit pi_closure_error(const std::string& what) : error(what) {}
};

// Interval refinement ran out of precision before separating two values.
struct precision_exhausted : error {
    explicit precision_exhausted(const std::string& what) : error(what) {}
};

struct system_mismatch : error {
    explicit system_mismatch(const std::string& what) : error(what) {}
};

struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& what) : error(what) {}
};

// Unknown unit, prefix, or system name.
struct lookup_error : error {
    explicit lookup_error(const std::string& what) : error(what) {}
};

struct parse_error : error {
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

}  // namespace qcalc
