#include <fstream>

#include <json.hpp>

#include "qcalc/errors.hpp"
#include "qcalc/systems.hpp"

namespace qcalc {

namespace {

rational factor_from_json(const nlohmann::json& j) {
    if (j.is_string()) return rational::from_string(j.get<std::string>());
    if (j.is_number_integer()) return rational(j.get<long long>());
    if (j.is_object() && j.contains("num") && j.contains("den")) {
        auto part = [&](const char* key) {
            const nlohmann::json& v = j.at(key);
            if (v.is_string()) return bigint::from_string(v.get<std::string>());
            if (v.is_number_integer()) return bigint(v.get<long long>());
            throw error("schema file: num/den must be integers or strings");
        };
        return rational(part("num"), part("den"));
    }
    throw error("schema file: factor must be a string, integer or {num, den} object");
}

}  // namespace

void load_schema_file(system_registry& registry, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open schema file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw error("schema file '" + path + "': " + e.what());
    }
    if (!doc.is_array()) throw error("schema file '" + path + "': expected a JSON array");

    for (const nlohmann::json& record : doc) {
        std::string source = record.at("source").get<std::string>();
        std::string target = record.at("target").get<std::string>();
        if (target != si_system().name())
            throw error("schema file: only schemas targeting SI register systems (got " +
                        source + " -> " + target + ")");
        const nlohmann::json& factors = record.at("factors");
        if (!factors.is_array() || factors.size() != base_quantity_count)
            throw error("schema file: " + source + " needs exactly 7 factors");
        std::array<rational, base_quantity_count> parsed;
        for (std::size_t i = 0; i < base_quantity_count; ++i)
            parsed[i] = factor_from_json(factors[i]);
        system_id id{source};
        registry.register_system(
            system_entry{id, conversion_schema(id, si_system(), std::move(parsed)), {}});
    }
}

}  // namespace qcalc
