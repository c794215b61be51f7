#include "qcalc/systems.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "qcalc/errors.hpp"

namespace qcalc {

conversion_schema::conversion_schema(system_id source, system_id target,
                                     std::array<rational, base_quantity_count> factors)
    : source_(std::move(source)), target_(std::move(target)), factors_(std::move(factors)) {
    for (base_quantity q : all_base_quantities)
        if (factor(q).sign() <= 0)
            throw error("conversion schema " + source_.name() + " -> " + target_.name() +
                        ": factor for " + std::string(base_quantity_symbol(q)) +
                        " must be positive");
}

conversion_schema conversion_schema::identity(const system_id& sys) {
    std::array<rational, base_quantity_count> ones;
    ones.fill(rational(1));
    return conversion_schema(sys, sys, std::move(ones));
}

conversion_schema compose(const conversion_schema& c2, const conversion_schema& c1) {
    if (c1.target() != c2.source())
        throw system_mismatch("compose: schema chain mismatch (" + c1.target().name() +
                              " vs " + c2.source().name() + ")");
    std::array<rational, base_quantity_count> factors;
    for (std::size_t i = 0; i < base_quantity_count; ++i)
        factors[i] = c1.factors()[i] * c2.factors()[i];
    return conversion_schema(c1.source(), c2.target(), std::move(factors));
}

conversion_schema invert(const conversion_schema& c) {
    std::array<rational, base_quantity_count> factors;
    for (std::size_t i = 0; i < base_quantity_count; ++i)
        factors[i] = c.factors()[i].reciprocal();
    return conversion_schema(c.target(), c.source(), std::move(factors));
}

quantity qconv(const conversion_schema& c, const quantity& x) {
    if (x.system() != c.source())
        throw system_mismatch("qconv: quantity in " + x.system().name() +
                              " fed to schema from " + c.source().name());
    rational factor(1);
    for (base_quantity q : all_base_quantities) {
        int e = x.dim().exponent(q);
        if (e != 0) factor *= rational::pow(c.factor(q), e);
    }
    return quantity(exact_scalar(factor) * x.mag(), x.dim(), c.target());
}

system_registry::system_registry(const system_registry& other) {
    std::shared_lock lock(other.mutex_);
    entries_ = other.entries_;
}

system_registry& system_registry::operator=(const system_registry& other) {
    if (this == &other) return *this;
    std::map<std::string, system_entry> copy;
    {
        std::shared_lock lock(other.mutex_);
        copy = other.entries_;
    }
    std::unique_lock lock(mutex_);
    entries_ = std::move(copy);
    return *this;
}

void system_registry::register_system(system_entry entry) {
    if (entry.id.name().empty()) throw error("register: empty system name");
    if (entry.metrification) {
        if (entry.metrification->source() != entry.id)
            throw error("register: metrification schema source must be " + entry.id.name());
        if (entry.metrification->target() != si_system())
            throw error("register: metrification schema must target SI");
    }
    std::set<std::string> seen;
    for (const auto& [name, unit] : entry.units) {
        if (name != unit.name) throw error("register: unit map key mismatch for '" + name + "'");
        if (!seen.insert(unit.name).second)
            throw error("register: duplicate unit name '" + unit.name + "'");
        for (const std::string& alias : unit.aliases)
            if (!seen.insert(alias).second)
                throw error("register: duplicate unit alias '" + alias + "' in system " +
                            entry.id.name());
    }
    std::unique_lock lock(mutex_);
    if (entries_.contains(entry.id.name()))
        throw error("register: system '" + entry.id.name() + "' already registered");
    entries_.emplace(entry.id.name(), std::move(entry));
}

bool system_registry::contains(const system_id& sys) const {
    std::shared_lock lock(mutex_);
    return entries_.contains(sys.name());
}

std::optional<system_entry> system_registry::find(const system_id& sys) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(sys.name());
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::optional<unit_entry> system_registry::find_unit(const system_id& sys,
                                                     std::string_view name) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(sys.name());
    if (it == entries_.end()) return std::nullopt;
    const auto& units = it->second.units;
    auto uit = units.find(std::string(name));
    if (uit != units.end()) return uit->second;
    for (const auto& [_, unit] : units)
        if (std::find(unit.aliases.begin(), unit.aliases.end(), name) != unit.aliases.end())
            return unit;
    return std::nullopt;
}

std::vector<system_id> system_registry::systems() const {
    std::shared_lock lock(mutex_);
    std::vector<system_id> out;
    out.reserve(entries_.size());
    for (const auto& [name, _] : entries_) out.emplace_back(system_id{name});
    return out;
}

namespace {

quantity raw_base_unit(base_quantity q, const system_id& sys) {
    return quantity(exact_scalar(1), dim_vec::base(q), sys);
}

std::array<rational, base_quantity_count> schema_factors(const rational& length,
                                                         const rational& mass) {
    std::array<rational, base_quantity_count> f;
    f.fill(rational(1));
    f[static_cast<std::size_t>(base_quantity::length)] = length;
    f[static_cast<std::size_t>(base_quantity::mass)] = mass;
    return f;
}

void add_unit(system_entry& entry, std::string name, std::vector<std::string> aliases,
              quantity value, unit_category category, std::string note = "") {
    unit_entry u{std::move(name), std::move(aliases), std::move(value), false, category,
                 std::move(note)};
    entry.units.emplace(u.name, u);
}

system_entry build_si_entry() {
    system_entry entry{si_system(), conversion_schema::identity(si_system()), si_units()};
    return entry;
}

system_entry build_bis_entry() {
    system_id bis{"BIS"};
    quantity yard = raw_base_unit(base_quantity::length, bis);
    quantity pound = raw_base_unit(base_quantity::mass, bis);
    quantity second = raw_base_unit(base_quantity::time, bis);
    quantity foot = scale(exact_scalar(rational(1, 3)), yard);
    quantity inch = scale(exact_scalar(rational(1, 12)), foot);
    quantity ounce = scale(exact_scalar(rational(1, 16)), pound);
    quantity gallon = scale(exact_scalar(rational::from_string("277.421")), inch.pow(3));

    system_entry entry{bis,
                       conversion_schema(bis, si_system(),
                                         schema_factors(rational::from_string("0.9143993"),
                                                        rational::from_string("0.453592338"))),
                       {}};
    add_unit(entry, "yard", {"yd"}, yard, unit_category::base);
    add_unit(entry, "pound", {"lb"}, pound, unit_category::base);
    add_unit(entry, "second", {"s", "sec"}, second, unit_category::base);
    add_unit(entry, "foot", {"ft"}, foot, unit_category::derived);
    add_unit(entry, "inch", {"in"}, inch, unit_category::derived);
    add_unit(entry, "ounce", {"oz"}, ounce, unit_category::derived,
             "avoirdupois ounce, pound/16; the source ontology's 37.8 g example implies "
             "pound/12 and is recorded as an erratum");
    add_unit(entry, "gallon", {"gal"}, gallon, unit_category::derived);
    return entry;
}

system_entry build_usc_entry() {
    system_id usc{"USC"};
    quantity yard = raw_base_unit(base_quantity::length, usc);
    quantity pound = raw_base_unit(base_quantity::mass, usc);
    quantity second = raw_base_unit(base_quantity::time, usc);
    quantity foot = scale(exact_scalar(rational(1, 3)), yard);
    quantity inch = scale(exact_scalar(rational(1, 12)), foot);
    quantity gallon = scale(exact_scalar(231), inch.pow(3));

    system_entry entry{usc,
                       conversion_schema(usc, si_system(),
                                         schema_factors(rational::from_string("0.9144018"),
                                                        rational::from_string("0.45359237"))),
                       {}};
    add_unit(entry, "yard", {"yd"}, yard, unit_category::base);
    add_unit(entry, "pound", {"lb"}, pound, unit_category::base);
    add_unit(entry, "second", {"s", "sec"}, second, unit_category::base);
    add_unit(entry, "foot", {"ft"}, foot, unit_category::derived);
    add_unit(entry, "inch", {"in"}, inch, unit_category::derived);
    add_unit(entry, "gallon", {"gal"}, gallon, unit_category::derived,
             "the 1707 wine gallon, 231 cubic inches");
    return entry;
}

system_entry build_cgs_entry() {
    system_id cgs{"CGS"};
    quantity centimetre = raw_base_unit(base_quantity::length, cgs);
    quantity gram = raw_base_unit(base_quantity::mass, cgs);
    quantity second = raw_base_unit(base_quantity::time, cgs);

    system_entry entry{cgs,
                       conversion_schema(cgs, si_system(),
                                         schema_factors(rational(1, 100), rational(1, 1000))),
                       {}};
    add_unit(entry, "centimetre", {"cm", "centimeter"}, centimetre, unit_category::base);
    add_unit(entry, "gram", {"g"}, gram, unit_category::base);
    add_unit(entry, "second", {"s", "sec"}, second, unit_category::base);
    return entry;
}

}  // namespace

system_registry system_registry::with_builtins() {
    system_registry registry;
    registry.register_system(build_si_entry());
    registry.register_system(build_bis_entry());
    registry.register_system(build_usc_entry());
    registry.register_system(build_cgs_entry());
    return registry;
}

const system_registry& system_registry::builtins() {
    static const system_registry registry = with_builtins();
    return registry;
}

quantity bunit(base_quantity d, const system_id& sys, const system_registry& registry) {
    if (!registry.contains(sys))
        throw lookup_error("bunit: system '" + sys.name() + "' is not registered");
    return raw_base_unit(d, sys);
}

quantity bunit(base_quantity d, const system_id& sys) {
    return bunit(d, sys, system_registry::builtins());
}

quantity metrify(const quantity& x, const system_registry& registry) {
    auto entry = registry.find(x.system());
    if (!entry) throw lookup_error("metrify: system '" + x.system().name() + "' is not registered");
    if (!entry->metrification)
        throw error("metrify: system '" + x.system().name() + "' is not metrifiable");
    return qconv(*entry->metrification, x);
}

quantity qmc(const quantity& x, const system_id& to, const system_registry& registry) {
    auto target = registry.find(to);
    if (!target) throw lookup_error("qmc: system '" + to.name() + "' is not registered");
    if (!target->metrification)
        throw error("qmc: system '" + to.name() + "' is not metrifiable");
    auto source = registry.find(x.system());
    if (!source) throw lookup_error("qmc: system '" + x.system().name() + "' is not registered");
    if (!source->metrification)
        throw error("qmc: system '" + x.system().name() + "' is not metrifiable");
    return qconv(compose(invert(*target->metrification), *source->metrification), x);
}

std::optional<unit_resolution> resolve_unit(const system_registry& registry,
                                            const system_id& sys, std::string_view spelled,
                                            std::string* detail) {
    if (!registry.contains(sys)) {
        if (detail) *detail = "unknown system '" + sys.name() + "'";
        return std::nullopt;
    }
    if (auto direct = registry.find_unit(sys, spelled))
        return unit_resolution{*direct, std::nullopt};

    // Prefix split, longest spelling first so deca beats deci's 'd'.
    struct candidate {
        std::string_view spelling;
        const prefix_entry* prefix;
    };
    std::vector<candidate> candidates;
    for (const prefix_entry& p : si_prefixes()) {
        candidates.push_back({p.name, &p});
        candidates.push_back({p.symbol, &p});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const candidate& a, const candidate& b) {
                         return a.spelling.size() > b.spelling.size();
                     });

    std::string why;
    for (const candidate& c : candidates) {
        if (spelled.size() <= c.spelling.size() || !spelled.starts_with(c.spelling)) continue;
        std::string_view rest = spelled.substr(c.spelling.size());
        if (auto unit = registry.find_unit(sys, rest)) {
            if (unit->prefixable) return unit_resolution{*unit, *c.prefix};
            if (why.empty())
                why = "unit '" + unit->name + "' does not take prefixes";
            continue;
        }
        // A remainder that itself splits as prefix + unit means two prefixes.
        for (const candidate& inner : candidates) {
            if (rest.size() <= inner.spelling.size() || !rest.starts_with(inner.spelling))
                continue;
            if (auto nested = registry.find_unit(sys, rest.substr(inner.spelling.size()));
                nested && nested->prefixable && why.empty())
                why = "double prefix in '" + std::string(spelled) + "'";
        }
    }
    if (detail) *detail = why.empty() ? "unknown unit '" + std::string(spelled) + "'" : why;
    return std::nullopt;
}

}  // namespace qcalc
