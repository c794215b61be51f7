#include "qcalc/si.hpp"

#include "qcalc/errors.hpp"

namespace qcalc {

std::string_view unit_category_name(unit_category c) {
    switch (c) {
        case unit_category::base: return "base";
        case unit_category::derived: return "derived";
        case unit_category::accepted: return "accepted";
        case unit_category::constant: return "constant";
        case unit_category::astronomical: return "astronomical";
        case unit_category::imperial_in_si: return "imperial-in-si";
    }
    throw error("unknown unit category");
}

const system_id& si_system() {
    static const system_id si{"SI"};
    return si;
}

exact_scalar prefix_entry::factor() const {
    if (exponent10 >= 0) return exact_scalar(rational(bigint::pow10(exponent10), bigint(1)));
    return exact_scalar(rational(bigint(1), bigint::pow10(-exponent10)));
}

const std::vector<prefix_entry>& si_prefixes() {
    static const std::vector<prefix_entry> table = {
        {"quetta", "Q", 30}, {"ronna", "R", 27}, {"yotta", "Y", 24}, {"zetta", "Z", 21},
        {"exa", "E", 18},    {"peta", "P", 15},  {"tera", "T", 12},  {"giga", "G", 9},
        {"mega", "M", 6},    {"kilo", "k", 3},   {"hecto", "h", 2},  {"deca", "da", 1},
        {"deci", "d", -1},   {"centi", "c", -2}, {"milli", "m", -3}, {"micro", "u", -6},
        {"nano", "n", -9},   {"pico", "p", -12}, {"femto", "f", -15}, {"atto", "a", -18},
        {"zepto", "z", -21}, {"yocto", "y", -24}, {"ronto", "r", -27}, {"quecto", "q", -30},
    };
    return table;
}

std::optional<prefix_entry> find_prefix(std::string_view name_or_symbol) {
    for (const prefix_entry& p : si_prefixes())
        if (p.name == name_or_symbol || p.symbol == name_or_symbol) return p;
    return std::nullopt;
}

bool is_base_unit(const quantity& x) {
    return x.mag() == exact_scalar(1) && x.dim().is_base();
}

quantity apply_prefix(const prefix_entry& p, const quantity& u) {
    return scale(p.factor(), u);
}

quantity celsius(const exact_scalar& degrees) {
    exact_scalar kelvins = degrees + exact_scalar(rational(5463, 20));
    return quantity(kelvins, dim_vec::base(base_quantity::temperature), si_system());
}

namespace {

quantity si_base(base_quantity q) {
    return quantity(exact_scalar(1), dim_vec::base(q), si_system());
}

exact_scalar dec(std::string_view text) { return exact_scalar(rational::from_string(text)); }

struct ontology {
    std::map<std::string, unit_entry> units;
    std::map<std::string, quantity> constants;

    void add(std::string name, std::vector<std::string> aliases, quantity value,
             bool prefixable, unit_category category, std::string note = "") {
        unit_entry entry{std::move(name), std::move(aliases), std::move(value),
                         prefixable, category, std::move(note)};
        if (!units.emplace(entry.name, entry).second)
            throw error("duplicate unit name '" + entry.name + "'");
    }
};

ontology build_si_ontology() {
    using bq = base_quantity;
    ontology o;

    quantity metre = si_base(bq::length);
    quantity kilogram = si_base(bq::mass);
    quantity second = si_base(bq::time);
    quantity ampere = si_base(bq::current);
    quantity kelvin = si_base(bq::temperature);
    quantity mole = si_base(bq::amount);
    quantity candela = si_base(bq::intensity);

    o.add("metre", {"m", "meter"}, metre, true, unit_category::base);
    o.add("kilogram", {"kg"}, kilogram, false, unit_category::base);
    o.add("second", {"s", "sec"}, second, true, unit_category::base);
    o.add("ampere", {"A", "amp"}, ampere, true, unit_category::base);
    o.add("kelvin", {"K"}, kelvin, true, unit_category::base);
    o.add("mole", {"mol"}, mole, true, unit_category::base);
    o.add("candela", {"cd"}, candela, true, unit_category::base);

    quantity hertz = second.inverse();
    quantity radian = metre * metre.inverse();
    quantity steradian = metre.pow(2) * metre.pow(-2);
    quantity joule = kilogram * metre.pow(2) * second.pow(-2);
    quantity watt = kilogram * metre.pow(2) * second.pow(-3);
    quantity coulomb = ampere * second;
    quantity lumen = candela * steradian;
    quantity newton = kilogram * metre * second.pow(-2);
    quantity pascal = kilogram * metre.pow(-1) * second.pow(-2);
    quantity volt = kilogram * metre.pow(2) * second.pow(-3) * ampere.pow(-1);
    // The source ontology's own equivalence theorem fixes farad = coulomb/volt,
    // which forces the negative mass exponent.
    quantity farad = kilogram.pow(-1) * metre.pow(-2) * second.pow(4) * ampere.pow(2);
    quantity ohm = kilogram * metre.pow(2) * second.pow(-3) * ampere.pow(-2);

    o.add("hertz", {"Hz"}, hertz, true, unit_category::derived);
    o.add("radian", {"rad"}, radian, true, unit_category::derived);
    o.add("steradian", {"sr"}, steradian, true, unit_category::derived);
    o.add("joule", {"J"}, joule, true, unit_category::derived);
    o.add("watt", {"W"}, watt, true, unit_category::derived);
    o.add("coulomb", {"C"}, coulomb, true, unit_category::derived);
    o.add("lumen", {"lm"}, lumen, true, unit_category::derived);
    o.add("newton", {"N"}, newton, true, unit_category::derived);
    o.add("pascal", {"Pa"}, pascal, true, unit_category::derived);
    o.add("volt", {"V"}, volt, true, unit_category::derived);
    o.add("farad", {"F"}, farad, true, unit_category::derived);
    o.add("ohm", {}, ohm, true, unit_category::derived);
    o.add("siemens", {"S"}, ohm.inverse(), true, unit_category::derived);
    o.add("weber", {"Wb"}, volt * second, true, unit_category::derived);
    o.add("tesla", {"T"}, volt * second * metre.pow(-2), true, unit_category::derived);
    o.add("henry", {"H"}, volt * second / ampere, true, unit_category::derived);
    o.add("lux", {"lx"}, lumen * metre.pow(-2), true, unit_category::derived);
    o.add("becquerel", {"Bq"}, second.inverse(), true, unit_category::derived);
    o.add("gray", {"Gy"}, joule / kilogram, true, unit_category::derived);
    o.add("sievert", {"Sv"}, joule / kilogram, true, unit_category::derived);
    o.add("katal", {"kat"}, mole / second, true, unit_category::derived);

    quantity minute = scale(exact_scalar(60), second);
    quantity hour = scale(exact_scalar(60), minute);
    quantity day = scale(exact_scalar(24), hour);
    quantity degree = scale(exact_scalar(rational(1, 180), 1), radian);
    quantity litre = scale(dec("0.001"), metre.pow(3));
    quantity gram = scale(dec("0.001"), kilogram);

    o.add("minute", {"min"}, minute, false, unit_category::accepted);
    o.add("hour", {"h", "hr"}, hour, false, unit_category::accepted);
    o.add("day", {"d"}, day, false, unit_category::accepted);
    o.add("degree", {"deg"}, degree, false, unit_category::accepted);
    o.add("litre", {"L", "l", "liter"}, litre, true, unit_category::accepted);
    o.add("tonne", {"t"}, scale(exact_scalar(1000), kilogram), true, unit_category::accepted);
    o.add("hectare", {"ha"}, scale(exact_scalar(100), metre).pow(2), false,
          unit_category::accepted);
    o.add("gram", {"g"}, gram, true, unit_category::accepted);

    quantity speed_of_light = scale(exact_scalar(299792458), metre / second);
    quantity planck = scale(dec("6.62607015e-34"), joule * second);
    quantity elementary_charge = scale(dec("1.602176634e-19"), coulomb);
    quantity boltzmann = scale(dec("1.380649e-23"), joule / kelvin);
    quantity avogadro = scale(dec("6.02214076e23"), mole.inverse());
    quantity luminous_efficacy = scale(exact_scalar(683), lumen / watt);
    quantity caesium_frequency = scale(exact_scalar(9192631770ll), hertz);

    o.add("c", {"speed-of-light"}, speed_of_light, false, unit_category::constant);
    o.add("planck", {"h_planck"}, planck, false, unit_category::constant);
    o.add("e", {"elementary-charge"}, elementary_charge, false, unit_category::constant);
    o.add("k", {"boltzmann"}, boltzmann, false, unit_category::constant);
    o.add("N_A", {"avogadro"}, avogadro, false, unit_category::constant);
    o.add("K_cd", {"luminous-efficacy"}, luminous_efficacy, false, unit_category::constant);
    o.add("Delta-v-Cs", {"dv_Cs"}, caesium_frequency, false, unit_category::constant);

    o.constants = {
        {"Delta-v-Cs", caesium_frequency},
        {"c", speed_of_light},
        {"h", planck},
        {"e", elementary_charge},
        {"k", boltzmann},
        {"N_A", avogadro},
        {"K_cd", luminous_efficacy},
    };

    quantity julian_year = scale(exact_scalar(rational(1461, 4)), day);
    quantity light_year = dnorm(speed_of_light * julian_year, dim_expr::base(bq::length));
    quantity astronomical_unit = scale(exact_scalar(149597870700ll), metre);
    quantity parsec = scale(exact_scalar(rational(648000), -1), astronomical_unit);

    o.add("julian-year", {"julian_year", "julianyear"}, julian_year, false,
          unit_category::astronomical);
    o.add("light-year", {"ly", "lightyear", "light_year"}, light_year, false,
          unit_category::astronomical);
    o.add("astronomical-unit", {"au", "astronomical_unit"}, astronomical_unit, false,
          unit_category::astronomical);
    o.add("parsec", {"pc"}, parsec, false, unit_category::astronomical);

    quantity yard = scale(dec("0.9144"), metre);
    quantity pound = scale(dec("0.4535937"), kilogram);
    quantity pint = scale(dec("0.56826125"), litre);

    o.add("yard", {"yd"}, yard, false, unit_category::imperial_in_si);
    o.add("mile", {"mi"}, scale(exact_scalar(1760), yard), false,
          unit_category::imperial_in_si);
    o.add("pound", {"lb"}, pound, false, unit_category::imperial_in_si,
          "value as printed in the source ontology; the 1959 international pound is "
          "0.45359237 kg");
    o.add("stone", {"st"}, scale(exact_scalar(14), pound), false,
          unit_category::imperial_in_si);
    o.add("pint", {"pt"}, pint, false, unit_category::imperial_in_si);
    o.add("gallon", {"gal"}, scale(exact_scalar(8), pint), false,
          unit_category::imperial_in_si);

    return o;
}

const ontology& si_ontology() {
    static const ontology o = build_si_ontology();
    return o;
}

}  // namespace

const std::map<std::string, unit_entry>& si_units() { return si_ontology().units; }

const std::map<std::string, quantity>& si_constants() { return si_ontology().constants; }

std::vector<std::pair<std::string, bool>> foundational_check() {
    const auto& constants = si_constants();
    const quantity& caesium = constants.at("Delta-v-Cs");
    const quantity& light = constants.at("c");
    const quantity& planck = constants.at("h");

    quantity metre = si_base(base_quantity::length);
    quantity kilogram = si_base(base_quantity::mass);
    quantity second = si_base(base_quantity::time);
    quantity one = quantity::one(si_system());

    std::vector<std::pair<std::string, bool>> results;
    results.emplace_back(
        "second", equivalent(second, scale(exact_scalar(9192631770ll), one) / caesium));
    results.emplace_back(
        "metre",
        equivalent(metre, (light / scale(exact_scalar(299792458), one)) * second));
    results.emplace_back(
        "kilogram",
        equivalent(kilogram, (planck / scale(dec("6.62607015e-34"), one)) *
                                 metre.pow(-2) * second));
    return results;
}

}  // namespace qcalc
