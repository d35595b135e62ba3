#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "liesurf/algebra.hpp"
#include "liesurf/formality.hpp"
#include "liesurf/harmonic.hpp"

namespace liesurf {

/// Spec file layout (JSON):
///   { "name": str,
///     "params": { "alpha": "1", ... },
///     "constants": [ {"i": "1", "h": "2", "k": "1", "value": "-i"}, ... ] }
/// Only one representative per antisymmetric/conjugate orbit is required;
/// completion fills the rest and flags inconsistent duplicates.
inline AlgebraSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("spec file: top level must be an object");
    std::string name = j.value("name", std::string("custom"));
    std::map<std::string, Rational> params;
    if (j.contains("params")) {
        for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
            params[it.key()] = Rational::from_string(it.value().get<std::string>());
    }
    std::vector<std::tuple<int, int, int, Scalar>> constants;
    if (j.contains("constants")) {
        for (const auto& entry : j["constants"]) {
            for (const char* field : {"i", "h", "k", "value"}) {
                if (!entry.contains(field)) throw ParseError(std::string("spec file: constant missing field \"") + field + "\"");
            }
            constants.emplace_back(index_from_name(entry["i"].get<std::string>()),
                                   index_from_name(entry["h"].get<std::string>()),
                                   index_from_name(entry["k"].get<std::string>()),
                                   Scalar::from_string(entry["value"].get<std::string>()));
        }
    }
    return make_spec(std::move(name), std::move(params), constants);
}

inline nlohmann::json spec_to_json(const AlgebraSpec& spec) {
    nlohmann::json j;
    j["name"] = spec.name;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : spec.params) params[k] = v.to_string();
    j["params"] = params;
    nlohmann::json constants = nlohmann::json::array();
    for (int i = 0; i < kAlphabet; ++i)
        for (int h = 0; h < kAlphabet; ++h)
            for (int k = 0; k < kAlphabet; ++k) {
                if (spec.c[i][h][k].is_zero()) continue;
                constants.push_back({{"i", index_name(i)}, {"h", index_name(h)}, {"k", index_name(k)},
                                     {"value", spec.c[i][h][k].to_string()}});
            }
    j["constants"] = constants;
    return j;
}

/// Loads, completes and validates a spec file; rejects invalid algebras.
inline AlgebraSpec ingest_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("spec file: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("spec file: " + std::string(e.what()));
    }
    AlgebraSpec spec = spec_from_json(j);
    ValidationReport rep = validate(spec);
    if (!rep.ok()) throw ValidationError("spec file failed validation:\n" + rep.summary());
    return spec;
}

/// Form serialization: list of {"monomial": "121b", "coeff": scalar-text};
/// monomials use a "b" suffix for barred indices, canonical order on output.
inline nlohmann::json form_to_json(const Form& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (int m = 0; m < kMonomials; ++m) {
        if (f[m].is_zero()) continue;
        arr.push_back({{"monomial", mono_name(m)}, {"coeff", f[m].to_string()}});
    }
    return arr;
}

inline Form form_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw ParseError("form: expected a list of monomial terms");
    Form f;
    for (const auto& term : arr) {
        int mask = 0, sign = 1;
        parse_monomial(term.at("monomial").get<std::string>(), mask, sign);
        Scalar c = Scalar::from_string(term.at("coeff").get<std::string>());
        f[mask] += sign < 0 ? -c : c;
    }
    return f;
}

inline nlohmann::json metric_to_json(const Metric& m) {
    return {{"r2", m.r2().to_string()}, {"s2", m.s2().to_string()}, {"u", m.u().to_string()}};
}

inline Metric metric_from_json(const nlohmann::json& j) {
    return Metric(Rational::from_string(j.at("r2").get<std::string>()),
                  Rational::from_string(j.at("s2").get<std::string>()),
                  Scalar::from_string(j.at("u").get<std::string>()));
}

inline nlohmann::json verdict_to_json(const FormalityVerdict& v) {
    nlohmann::json j = {{"kotschick", v.kotschick},
                        {"dolbeault", v.dolbeault},
                        {"bott_chern", v.bott_chern},
                        {"aeppli_algebra", v.aeppli_algebra},
                        {"aeppli_bc_module", v.aeppli_bc_module}};
    auto add_witness = [&j](const char* key, const std::optional<Witness>& w) {
        if (w) j[std::string(key) + "_witness"] = {{"left", form_to_json(w->left)},
                                                   {"right", form_to_json(w->right)},
                                                   {"product", form_to_json(w->product)}};
    };
    add_witness("kotschick", v.kotschick_witness);
    add_witness("dolbeault", v.dolbeault_witness);
    add_witness("bott_chern", v.bott_chern_witness);
    add_witness("aeppli_algebra", v.aeppli_algebra_witness);
    add_witness("aeppli_bc_module", v.aeppli_bc_module_witness);
    return j;
}

}  // namespace liesurf
