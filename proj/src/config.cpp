// SPDX-License-Identifier: MIT

#include "kcm/config.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#include "kcm/errors.hpp"

namespace kcm {

namespace {

using json = nlohmann::ordered_json;

double number_from(const json& j, const std::string& where) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const size_t slash = s.find('/');
        char* end = nullptr;
        if (slash != std::string::npos) {
            const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
            const double p = std::strtod(num.c_str(), &end);
            if (end != num.c_str() + num.size())
                throw DomainError(where + ": bad fraction \"" + s + "\"");
            const double q = std::strtod(den.c_str(), &end);
            if (end != den.c_str() + den.size() || q == 0.0)
                throw DomainError(where + ": bad fraction \"" + s + "\"");
            return p / q;
        }
        const double v = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size() || s.empty())
            throw DomainError(where + ": bad number \"" + s + "\"");
        return v;
    }
    throw DomainError(where + ": expected a number");
}

Mat matrix_from(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw DomainError(where + ": expected a non-empty array of rows");
    const int n = static_cast<int>(j.size());
    Mat M(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw DomainError(where + ": row " + std::to_string(i + 1) +
                              " must have " + std::to_string(n) + " entries");
        for (int k = 0; k < n; ++k)
            M(i, k) = number_from(row[k], where + "[" + std::to_string(i + 1) +
                                              "][" + std::to_string(k + 1) + "]");
    }
    return M;
}

char param_letter(GrowthTag tag) {
    return tag == GrowthTag::AtkinsonAllen ? 'c' : 's';
}

} // namespace

ModelConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("config: ") + e.what());
    }
    if (!root.is_object()) throw DomainError("config: top level must be an object");
    for (const auto& [key, value] : root.items()) {
        (void)value;
        if (key != "species" && key != "U" && key != "A" && key != "sweep")
            throw DomainError("config: unknown key \"" + key + "\"");
    }

    if (!root.contains("species") || !root["species"].is_array() ||
        root["species"].empty())
        throw DomainError("config: \"species\" must be a non-empty array");

    std::vector<SpeciesLaw> laws;
    for (const json& sp : root["species"]) {
        const std::string where = "species[" + std::to_string(laws.size() + 1) + "]";
        if (!sp.is_object()) throw DomainError(where + ": expected an object");
        if (!sp.contains("growth") || !sp["growth"].is_string())
            throw DomainError(where + ": missing growth law name");
        const std::string name = sp["growth"].get<std::string>();
        const std::optional<GrowthTag> tag = growth_tag_from_name(name);
        if (!tag) throw DomainError(where + ": unknown growth law \"" + name + "\"");

        SpeciesLaw law;
        law.kind.tag = *tag;
        law.r = sp.contains("r") ? number_from(sp["r"], where + ".r") : 1.0;

        if (growth_has_param(*tag)) {
            const std::string key(1, param_letter(*tag));
            if (!sp.contains("params") || !sp["params"].is_object() ||
                !sp["params"].contains(key))
                throw DomainError(where + ": " + name +
                                  " needs params.\"" + key + "\"");
            law.kind.param =
                number_from(sp["params"][key], where + ".params." + key);
        } else if (sp.contains("params") && !sp["params"].empty()) {
            throw DomainError(where + ": " + name + " takes no parameters");
        }
        laws.push_back(law);
    }
    const int n = static_cast<int>(laws.size());

    const bool has_u = root.contains("U"), has_a = root.contains("A");
    if (has_u == has_a)
        throw DomainError("config: exactly one of \"U\" or \"A\" is required");
    Mat U = matrix_from(root[has_u ? "U" : "A"], has_u ? "U" : "A");
    if (U.rows != n)
        throw DomainError("config: matrix size does not match species count");
    if (has_a) {  // mu_ij = a_ij / r_i
        for (int i = 0; i < n; ++i) {
            if (!(laws[i].r > 0.0))
                throw DomainError("config: \"A\" form needs positive rates");
            for (int j = 0; j < n; ++j) U(i, j) /= laws[i].r;
        }
    }

    ModelConfig cfg;
    cfg.model = make_model(std::move(laws), std::move(U));

    if (root.contains("sweep")) {
        const json& sw = root["sweep"];
        if (!sw.is_object()) throw DomainError("config: \"sweep\" must be an object");
        for (const auto& [key, value] : sw.items()) {
            (void)value;
            if (key != "target" && key != "from" && key != "to" && key != "grid")
                throw DomainError("config: unknown sweep key \"" + key + "\"");
        }
        if (!sw.contains("target") || !sw["target"].is_string())
            throw DomainError("config: sweep.target must name a parameter");
        SweepSpec spec;
        spec.target = sw["target"].get<std::string>();
        const std::optional<ParamRef> ref = parse_param_ref(spec.target);
        if (!ref)
            throw DomainError("config: bad sweep target \"" + spec.target + "\"");
        spec.ref = *ref;
        if (spec.ref.species >= cfg.model.n())
            throw DomainError("config: sweep target species out of range");
        if (spec.ref.kind == ParamRef::Kind::Shape &&
            !growth_has_param(cfg.model.laws[spec.ref.species].kind.tag))
            throw DomainError("config: sweep target species has no shape parameter");
        if (!sw.contains("from") || !sw.contains("to"))
            throw DomainError("config: sweep needs \"from\" and \"to\"");
        spec.from = number_from(sw["from"], "sweep.from");
        spec.to = number_from(sw["to"], "sweep.to");
        if (!(spec.from < spec.to))
            throw DomainError("config: sweep needs from < to");
        if (sw.contains("grid")) {
            if (!sw["grid"].is_number_integer())
                throw DomainError("config: sweep.grid must be an integer");
            spec.grid = sw["grid"].get<int>();
        } else {
            spec.grid = 200;
        }
        if (spec.grid < 2) throw DomainError("config: sweep.grid must be >= 2");
        cfg.sweep = std::move(spec);
    }

    cfg.canonical = canonical_json(cfg.model);
    cfg.digest = fnv1a_hex(cfg.canonical);
    return cfg;
}

std::string canonical_json(const Model& m) {
    json root;
    json species = json::array();
    for (const SpeciesLaw& law : m.laws) {
        json sp;
        sp["growth"] = growth_name(law.kind.tag);
        sp["r"] = law.r;
        if (growth_has_param(law.kind.tag))
            sp["params"] = {{std::string(1, param_letter(law.kind.tag)),
                             law.kind.param}};
        species.push_back(std::move(sp));
    }
    root["species"] = std::move(species);
    json rows = json::array();
    for (int i = 0; i < m.U.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.U.cols; ++j) row.push_back(m.U(i, j));
        rows.push_back(std::move(row));
    }
    root["U"] = std::move(rows);
    return root.dump();
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace kcm
