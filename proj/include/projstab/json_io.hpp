#pragma once

#include <projstab/scan.hpp>

#include <json.hpp>

#include <string>

namespace projstab {

inline nlohmann::json to_json(const StabilizerGroup& g) {
    nlohmann::json out;
    out["field"] = g.field.spec_string();
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& pt : g.base_set.points()) pts.push_back(pt.to_string());
    out["base_set"] = pts;
    out["group_type"] = g.group_type.name();
    if (g.group_type.kind == GroupKind::Infinite) {
        out["order"] = nullptr;
        out["witness"] = g.witness;
        return out;
    }
    out["order"] = g.group_type.order;
    nlohmann::json els = nlohmann::json::array();
    nlohmann::json perms = nlohmann::json::array();
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        els.push_back(g.elements[i].coeff_strings());
        perms.push_back(g.perms[i].cycle_string());
    }
    out["elements"] = els;
    out["perms"] = perms;
    return out;
}

inline nlohmann::json to_json(const Classification& c) {
    nlohmann::json out;
    out["field"] = c.field.spec_string();
    out["lambda"] = c.lam.to_string();
    out["group_type"] = c.group_type.name();
    out["order"] = c.group_type.order;
    out["theorem_case"] = theorem_case_name(c.theorem_case);
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : c.orbit.values) vals.push_back(v.to_string());
    out["orbit_values"] = vals;
    out["distinct_count"] = c.orbit.distinct_count;
    return out;
}

inline nlohmann::json to_json(const ScanReport& report) {
    nlohmann::json out;
    out["max_p"] = report.max_p;
    out["include_quadratic"] = report.include_quadratic;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json r;
        r["field_spec"] = row.field_spec;
        r["q"] = row.q;
        r["counts"] = row.counts;
        nlohmann::json mism = nlohmann::json::array();
        for (const auto& m : row.mismatches)
            mism.push_back({{"lambda", m.lambda},
                            {"expected", m.expected},
                            {"brute_force", m.brute_force}});
        r["mismatches"] = mism;
        rows.push_back(r);
    }
    out["rows"] = rows;
    out["total_mismatches"] = report.total_mismatches();
    return out;
}

// One row per scanned lambda; fixed columns for diffable goldens.
inline std::string scan_to_csv(const ScanReport& report) {
    std::string out = "field,q,lambda,group_type,order,theorem_case\n";
    for (const auto& row : report.rows)
        for (const auto& lr : row.lambdas)
            out += row.field_spec + "," + std::to_string(row.q) + "," + lr.lambda + "," +
                   lr.group_type.name() + "," + std::to_string(lr.group_type.order) + "," +
                   theorem_case_name(lr.theorem_case) + "\n";
    return out;
}

}  // namespace projstab
