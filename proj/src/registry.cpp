#include "workbench/registry.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"

#include "workbench/errors.hpp"

namespace workbench {

namespace {

using nlohmann::json;

std::optional<int> opt_int(const json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<int>();
}

std::optional<std::string> opt_str(const json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<std::string>();
}

ExpectedModuli parse_expected(const json& j) {
    ExpectedModuli out;
    out.verdict = j.at("verdict").is_null() ? "" : j.at("verdict").get<std::string>();
    if (!j.at("constraints").is_null())
        out.constraints = j.at("constraints").get<std::vector<std::string>>();
    out.eliminant = opt_str(j, "eliminant");
    out.points_total = opt_int(j, "points_total");
    out.points_real = opt_int(j, "points_real");
    out.orbits = opt_int(j, "orbits");
    out.dimension = opt_int(j, "dimension");
    out.irreducible = opt_str(j, "irreducible");
    if (!j.at("notes").is_null())
        out.notes = j.at("notes").get<std::vector<std::string>>();
    return out;
}

}  // namespace

const RegistryEntry* Registry::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

Registry load_registry(const std::string& dir) {
    const std::string index_path = dir + "/expected.json";
    std::ifstream in(index_path);
    if (!in) throw Error("cannot open registry index " + index_path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& ex) {
        throw Error("malformed registry index " + index_path + ": " + ex.what());
    }

    Registry reg;
    try {
        if (doc.contains("notes"))
            reg.notes = doc.at("notes").get<std::vector<std::string>>();
        for (const auto& j : doc.at("entries")) {
            RegistryEntry e;
            e.name = j.at("name").get<std::string>();
            e.file = j.at("file").get<std::string>();
            e.group = j.at("group").get<std::string>();
            e.table = parse_table_file(dir + "/" + e.file);
            validate(e.table);
            const auto& g = j.at("gauge");
            for (int i = 0; i < 3; ++i) {
                e.gauge.y[i] = g.at("y").at(i).get<int>();
                e.gauge.x[i] = g.at("x").at(i).get<int>();
            }
            for (const auto& [key, val] : j.at("params").items()) {
                if (key.size() != 1)
                    throw Error("registry entry " + e.name + ": bad parameter name " + key);
                e.params[key[0]] = val.get<int>();
            }
            e.geometric = j.at("geometric").get<bool>();
            e.zariski = j.at("zariski").get<bool>();
            e.expected = parse_expected(j.at("expected"));
            reg.entries.push_back(std::move(e));
        }
    } catch (const json::exception& ex) {
        throw Error(std::string("malformed registry entry: ") + ex.what());
    }
    return reg;
}

std::string default_registry_dir() {
    if (const char* env = std::getenv("WORKBENCH_REGISTRY")) return env;
    return "registry";
}

}  // namespace workbench
