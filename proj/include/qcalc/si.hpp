#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcalc/quantity.hpp"

namespace qcalc {

class system_registry;

enum class unit_category { base, derived, accepted, constant, astronomical, imperial_in_si };

std::string_view unit_category_name(unit_category c);

/// One named unit (or constant) in a system's registry.
struct unit_entry {
    std::string name;
    std::vector<std::string> aliases;
    quantity value;
    bool prefixable = false;
    unit_category category = unit_category::base;
    /// Registry metadata, e.g. erratum annotations on inherited values.
    std::string note;
};

/// An SI prefix; factor() is the exact power of ten.
struct prefix_entry {
    std::string name;
    std::string symbol;
    int exponent10 = 0;

    exact_scalar factor() const;
};

const system_id& si_system();

/// All 24 SI prefixes, quecto (1e-30) through quetta (1e30).
const std::vector<prefix_entry>& si_prefixes();
std::optional<prefix_entry> find_prefix(std::string_view name_or_symbol);

/// The SI ontology keyed by primary unit name: the 7 base units, the named
/// derived units, accepted non-SI units, the defining constants, astronomical
/// units, and the imperial units with exact SI definitions.
const std::map<std::string, unit_entry>& si_units();

/// The seven defining constants under their conventional labels:
/// Delta-v-Cs, c, h, e, k, N_A, K_cd.
const std::map<std::string, quantity>& si_constants();

/// mag(x) = 1 and dim(x) is a base dimension.
bool is_base_unit(const quantity& x);

/// Base-unit constructor. The system must be registered.
quantity bunit(base_quantity d, const system_id& sys, const system_registry& registry);
quantity bunit(base_quantity d, const system_id& sys);

quantity apply_prefix(const prefix_entry& p, const quantity& u);

/// T degrees Celsius as a kelvin quantity: (T + 273.15) kelvin. The input
/// must be a plain rational (pi exponent zero).
quantity celsius(const exact_scalar& degrees);

/// Re-derives second, metre and kilogram from the defining constants and
/// reports whether each equivalence holds. All three should be true.
std::vector<std::pair<std::string, bool>> foundational_check();

}  // namespace qcalc
