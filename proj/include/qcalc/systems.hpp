#pragma once

#include <array>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "qcalc/si.hpp"

namespace qcalc {

/// Positive rational scale factors, one per base dimension, translating
/// magnitudes of quantities measured in `source` into `target`.
class conversion_schema {
public:
    conversion_schema(system_id source, system_id target,
                      std::array<rational, base_quantity_count> factors);

    /// All factors 1; source = target = sys.
    static conversion_schema identity(const system_id& sys);

    const system_id& source() const { return source_; }
    const system_id& target() const { return target_; }
    const rational& factor(base_quantity q) const {
        return factors_[static_cast<std::size_t>(q)];
    }
    const std::array<rational, base_quantity_count>& factors() const { return factors_; }

    friend bool operator==(const conversion_schema& a, const conversion_schema& b) = default;

private:
    system_id source_;
    system_id target_;
    std::array<rational, base_quantity_count> factors_;
};

/// c2 after c1: pointwise factor products. Requires target(c1) == source(c2).
conversion_schema compose(const conversion_schema& c2, const conversion_schema& c1);
/// Reciprocal factors with source and target swapped.
conversion_schema invert(const conversion_schema& c);

/// Magnitude scaled by prod_i factor_i^exponent_i; the dimension is
/// unchanged and the system becomes the schema's target. Requires
/// system(x) == source(c).
quantity qconv(const conversion_schema& c, const quantity& x);

/// A registered unit system: its units plus the metrification schema into
/// the SI (absent for systems declared non-metrifiable).
struct system_entry {
    system_id id;
    std::optional<conversion_schema> metrification;
    std::map<std::string, unit_entry> units;
};

/// Thread-safe, append-only registry of unit systems. Registrations
/// serialize; lookups run concurrently and return snapshot copies.
class system_registry {
public:
    system_registry() = default;
    system_registry(const system_registry& other);
    system_registry& operator=(const system_registry& other);

    /// SI plus the builtin BIS, USC and CGS systems.
    static system_registry with_builtins();
    static const system_registry& builtins();

    /// Validates and adds a system. Rejects duplicate ids, metrification
    /// schemas that do not map this system onto the SI, and duplicate unit
    /// names or aliases. (Factor positivity is a conversion_schema invariant.)
    void register_system(system_entry entry);

    bool contains(const system_id& sys) const;
    std::optional<system_entry> find(const system_id& sys) const;
    /// Lookup by primary name or alias. No prefix handling here.
    std::optional<unit_entry> find_unit(const system_id& sys, std::string_view name) const;
    std::vector<system_id> systems() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<std::string, system_entry> entries_;
};

/// Converts into the SI via the source system's metrification schema.
quantity metrify(const quantity& x, const system_registry& registry = system_registry::builtins());

/// System-to-system conversion via metrification: into the SI with the
/// source schema, out of the SI with the inverted target schema.
quantity qmc(const quantity& x, const system_id& to,
             const system_registry& registry = system_registry::builtins());

/// A unit token resolved against a system registry: the entry plus the
/// prefix, if the spelling was split as prefix + prefixable unit.
struct unit_resolution {
    unit_entry entry;
    std::optional<prefix_entry> prefix;

    quantity value() const {
        return prefix ? apply_prefix(*prefix, entry.value) : entry.value;
    }
};

/// Resolves a spelled unit name: exact names and aliases win over prefix
/// splits, and longer prefix spellings are tried first. Returns nullopt on
/// failure; `detail`, when given, receives a human-readable reason.
std::optional<unit_resolution> resolve_unit(const system_registry& registry,
                                            const system_id& sys, std::string_view spelled,
                                            std::string* detail = nullptr);

/// Loads a JSON schema interchange file and registers each record's source
/// system. Records look like
///   {"source": "FPS", "target": "SI",
///    "factors": ["0.3048", "0.45359237", "1", "1", "1", "1", "1"]}
/// with exactly 7 factors, each an exact decimal/fraction string or a
/// {"num", "den"} pair. Only schemas targeting the SI are accepted.
void load_schema_file(system_registry& registry, const std::string& path);

}  // namespace qcalc
