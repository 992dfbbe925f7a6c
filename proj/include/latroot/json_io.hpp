#pragma once

// JSON interchange for configurations, fans, root systems and reports.
// All user-facing indices are 1-based; everything is emitted in sorted
// order so identical inputs always serialize to identical bytes.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "latroot/classify.hpp"
#include "latroot/configuration.hpp"
#include "latroot/errors.hpp"
#include "latroot/fan.hpp"
#include "latroot/integers.hpp"
#include "latroot/root_system.hpp"

namespace latroot {

using nlohmann::json;

inline json to_json(const Int& x) {
    if (!x.fits_slong_p())
        throw InputError("integer " + x.get_str() + " does not fit the interchange format");
    return json(x.get_si());
}

inline json to_json(const IntVec& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(to_json(x));
    return arr;
}

inline Int int_from_json(const json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw InputError(what + " must be an integer, got " + j.dump());
    return Int(static_cast<long>(j.get<std::int64_t>()));
}

inline IntVec ivec_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + " must be an array, got " + j.dump());
    IntVec v;
    for (const json& x : j) v.push_back(int_from_json(x, what + " entry"));
    return v;
}

inline json to_json(const VectorConfiguration& v) {
    json out;
    out["rank"] = v.rank();
    json vecs = json::array();
    for (const IntVec& vec : v.vectors()) vecs.push_back(to_json(vec));
    out["vectors"] = vecs;
    if (!v.labels().empty()) out["labels"] = v.labels();
    return out;
}

inline VectorConfiguration configuration_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("vectors"))
        throw InputError("configuration object needs \"rank\" and \"vectors\"");
    Int rank = int_from_json(j.at("rank"), "rank");
    if (rank < 1 || rank > 64) throw InputError("unsupported rank " + rank.get_str());
    if (!j.at("vectors").is_array()) throw InputError("\"vectors\" must be an array");
    std::vector<IntVec> vectors;
    for (const json& v : j.at("vectors")) vectors.push_back(ivec_from_json(v, "vector"));
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j.at("labels").is_array()) throw InputError("\"labels\" must be an array");
        for (const json& l : j.at("labels")) {
            if (!l.is_string()) throw InputError("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return VectorConfiguration(static_cast<std::size_t>(rank.get_ui()), std::move(vectors),
                               std::move(labels));
}

inline json to_json(const Root& r) {
    json out;
    out["alpha"] = to_json(r.alpha);
    out["pairing"] = to_json(r.pairing);
    if (auto kind = r.kind()) out["kind"] = static_cast<int>(*kind);
    return out;
}

inline json to_json(const RootSystem& r) {
    json out;
    out["configuration"] = to_json(r.config);
    json roots = json::array();
    for (const Root& root : r.roots) roots.push_back(to_json(root));
    out["roots"] = roots;
    return out;
}

// Reconstructs a root system from its serialized form; pairings are
// recomputed and checked against the stored ones.
inline RootSystem root_system_from_json(const json& j) {
    if (!j.is_object() || !j.contains("configuration") || !j.contains("roots"))
        throw InputError("root system object needs \"configuration\" and \"roots\"");
    VectorConfiguration config = configuration_from_json(j.at("configuration"));
    std::vector<Root> roots;
    for (const json& rj : j.at("roots")) {
        if (!rj.is_object() || !rj.contains("alpha"))
            throw InputError("root object needs \"alpha\"");
        Root r;
        r.alpha = ivec_from_json(rj.at("alpha"), "alpha");
        r.pairing = pairing_vector(config, r.alpha);
        if (rj.contains("pairing") &&
            ivec_from_json(rj.at("pairing"), "pairing") != r.pairing)
            throw InputError("stored pairing of " + format_vector(r.alpha) +
                             " does not match the configuration");
        roots.push_back(std::move(r));
    }
    sort_and_dedup(roots);
    return RootSystem{std::move(config), std::move(roots)};
}

inline json to_json(const Fan& f) {
    json out;
    out["rank"] = f.rank();
    json rays = json::array();
    for (const IntVec& r : f.rays()) rays.push_back(to_json(r));
    out["rays"] = rays;
    json cones = json::array();
    for (const auto& cone : f.max_cones()) {
        json c = json::array();
        for (std::size_t i : cone) c.push_back(i + 1);
        cones.push_back(c);
    }
    out["max_cones"] = cones;
    return out;
}

inline Fan fan_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("rays") || !j.contains("max_cones"))
        throw InputError("fan object needs \"rank\", \"rays\" and \"max_cones\"");
    Int rank = int_from_json(j.at("rank"), "rank");
    if (rank < 1 || rank > 64) throw InputError("unsupported rank " + rank.get_str());
    std::vector<IntVec> rays;
    for (const json& r : j.at("rays")) rays.push_back(ivec_from_json(r, "ray"));
    std::vector<std::vector<std::size_t>> cones;
    if (!j.at("max_cones").is_array()) throw InputError("\"max_cones\" must be an array");
    for (const json& cj : j.at("max_cones")) {
        if (!cj.is_array()) throw InputError("each maximal cone must be an array of indices");
        std::vector<std::size_t> cone;
        for (const json& ij : cj) {
            Int idx = int_from_json(ij, "cone index");
            if (idx < 1) throw InputError("cone indices are 1-based, got " + idx.get_str());
            cone.push_back(static_cast<std::size_t>(idx.get_ui()) - 1);
        }
        cones.push_back(std::move(cone));
    }
    return Fan(static_cast<std::size_t>(rank.get_ui()), std::move(rays), std::move(cones));
}

inline json to_json(const IntegerMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
    return rows;
}

inline json to_json(const IrreducibleComponent& comp) {
    json out;
    out["family"] = std::string(1, family_letter(comp.label.family));
    out["rank"] = comp.label.rank;
    json simple = json::array();
    for (const Root& s : comp.simple) simple.push_back(to_json(s.alpha));
    out["simple_roots"] = simple;
    out["cartan"] = to_json(comp.cartan);
    json pairs = json::array();
    for (const auto& [a, b] : comp.conjugates)
        pairs.push_back(json::array({to_json(a.alpha), to_json(b.alpha)}));
    out["conjugate_pairs"] = pairs;
    json shorts = json::array();
    for (const Root& s : comp.short_roots) shorts.push_back(to_json(s.alpha));
    out["short_roots"] = shorts;
    return out;
}

inline json to_json(const ClassificationReport& rep) {
    json out;
    json comps = json::array();
    for (const IrreducibleComponent& c : rep.components) comps.push_back(to_json(c));
    out["components"] = comps;
    out["criteria_agreement"] = true;  // route disagreement throws instead
    return out;
}

inline json to_json(const PartitionReport& rep) {
    json out;
    json classes = json::array();
    for (const auto& cls : rep.classes) {
        json c = json::array();
        for (std::size_t i : cls) c.push_back(i + 1);
        classes.push_back(c);
    }
    out["classes"] = classes;
    out["factor_ranks"] = rep.factor_ranks;
    return out;
}

inline json to_json(const SymmetryReport& rep) {
    json out;
    out["roots"] = to_json(rep.roots);
    out["classification"] = to_json(rep.classification);
    out["partition"] = to_json(rep.partition);
    out["identity_holds"] = rep.identity_holds;
    if (!rep.identity_detail.empty()) out["identity_detail"] = rep.identity_detail;
    if (rep.signed_roots) {
        out["signed_roots"] = to_json(*rep.signed_roots);
        out["signed_classification"] = to_json(*rep.signed_classification);
        out["signed_subset"] = rep.signed_subset;
    }
    return out;
}

}  // namespace latroot
