#pragma once

/**
 * @file report.hpp
 * @brief Stable JSON/CSV serialization for sweep reports and dimension
 *        records. Integer values that can outgrow 64 bits are emitted as
 *        decimal strings so every number stays exact; two sweeps over the
 *        same grid serialize byte-identically except for wall_ms fields.
 */

#include <ostream>
#include <string>

#include <json.hpp>

#include "qcoset/bch.hpp"
#include "qcoset/claims.hpp"

namespace qcoset {

using json = nlohmann::ordered_json;

inline json to_json(const Counterexample& ce) {
    return json{{"witness", ce.witness.str()}, {"expected", ce.expected}, {"observed", ce.observed}};
}

inline json to_json(const CellResult& cell) {
    json j{{"q", cell.q}, {"m", cell.m}, {"n", cell.n.str()},
           {"outcome", to_string(cell.outcome)}};
    json ces = json::array();
    for (const auto& ce : cell.counterexamples) ces.push_back(to_json(ce));
    j["counterexamples"] = std::move(ces);
    j["note"] = cell.note;
    j["wall_ms"] = cell.wall_ms;
    return j;
}

inline json to_json(const SweepReport& rep) {
    json grid{{"q", rep.grid.qs},
              {"m", rep.grid.ms},
              {"max_n", rep.grid.max_n.str()},
              {"cell_time_budget_s", rep.grid.cell_time_budget_s}};
    json claims = json::array();
    for (const auto& c : rep.claims) {
        json cj{{"id", c.claim_id}, {"kind", to_string(c.kind)}, {"summary", c.summary}};
        json cells = json::array();
        for (const auto& cell : c.cells) cells.push_back(to_json(cell));
        cj["cells"] = std::move(cells);
        claims.push_back(std::move(cj));
    }
    return json{{"tool", rep.tool}, {"version", rep.version}, {"grid", std::move(grid)},
                {"claims", std::move(claims)}};
}

/// Remove the timing fields in place (report comparison across runs).
inline void strip_timing(json& j) {
    if (j.is_object()) {
        j.erase("wall_ms");
        for (auto& [k, v] : j.items()) strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip_timing(v);
    }
}

inline json to_json(const DimensionRecord& r) {
    json j{{"q", r.spec.params.q},
           {"m", r.spec.params.m},
           {"n", r.spec.params.n.str()},
           {"delta", r.spec.delta.str()},
           {"b", r.spec.b},
           {"t_size", r.t_size.str()},
           {"dimension", r.dimension.str()}};
    j["bose_distance"] = r.bose_distance ? json(r.bose_distance->str()) : json(nullptr);
    j["closed_form"] = r.closed_form ? json(r.closed_form->str()) : json(nullptr);
    j["source"] = r.closed_form_source ? json(*r.closed_form_source) : json(nullptr);
    j["closed_form_agrees"] = r.closed_form_agrees;
    return j;
}

inline DimensionRecord dimension_record_from_json(const json& j) {
    DimensionRecord r;
    r.spec.params = CodeParams::make(j.at("q").get<unsigned>(), j.at("m").get<unsigned>());
    r.spec.delta = Int(j.at("delta").get<std::string>());
    r.spec.b = j.at("b").get<int>();
    r.t_size = Int(j.at("t_size").get<std::string>());
    r.dimension = Int(j.at("dimension").get<std::string>());
    if (!j.at("bose_distance").is_null())
        r.bose_distance = Int(j.at("bose_distance").get<std::string>());
    if (!j.at("closed_form").is_null())
        r.closed_form = Int(j.at("closed_form").get<std::string>());
    if (!j.at("source").is_null()) r.closed_form_source = j.at("source").get<std::string>();
    r.closed_form_agrees = j.at("closed_form_agrees").get<bool>();
    return r;
}

inline bool operator==(const DimensionRecord& a, const DimensionRecord& b) {
    return a.spec.params == b.spec.params && a.spec.delta == b.spec.delta && a.spec.b == b.spec.b &&
           a.t_size == b.t_size && a.dimension == b.dimension &&
           a.bose_distance == b.bose_distance && a.closed_form == b.closed_form &&
           a.closed_form_source == b.closed_form_source &&
           a.closed_form_agrees == b.closed_form_agrees;
}

inline constexpr const char* kDimensionCsvHeader =
    "q,m,n,delta,b,t_size,dimension,bose_distance,closed_form,source";

inline void write_dimension_csv_row(std::ostream& os, const DimensionRecord& r) {
    os << r.spec.params.q << ',' << r.spec.params.m << ',' << r.spec.params.n << ','
       << r.spec.delta << ',' << r.spec.b << ',' << r.t_size << ',' << r.dimension << ',';
    if (r.bose_distance) os << *r.bose_distance;
    os << ',';
    if (r.closed_form) os << *r.closed_form;
    os << ',';
    if (r.closed_form_source) os << *r.closed_form_source;
    os << '\n';
}

} // namespace qcoset
