#pragma once

// JSON / CSV / human renderings of records and reports. Schemas are stable:
//   JSON record: {family, params:{...}, topology, index, value, value_kind,
//                 baseline, margin}
//   CSV columns: family,params,topology,index,value,value_kind,baseline,margin
// All numbers are formatted with an explicit digit count; no locale state.

#include <cstdio>
#include <string>

#include <json.hpp>

#include "extremal/record.hpp"
#include "extremal/verify.hpp"

namespace extremal {

inline std::string format_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

inline nlohmann::ordered_json to_json(const ExtremalRecord& rec) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, val] : rec.params) params[key] = val;
    return nlohmann::ordered_json{{"family", to_string(rec.family)},
                                  {"params", params},
                                  {"topology", to_string(rec.topology)},
                                  {"index", rec.index},
                                  {"value", rec.value},
                                  {"value_kind", to_string(rec.value_kind)},
                                  {"baseline", rec.baseline},
                                  {"margin", rec.margin}};
}

inline constexpr const char* csv_header =
    "family,params,topology,index,value,value_kind,baseline,margin";

inline std::string params_string(const Params& params) {
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ";";
        s += params[i].first + "=" + std::to_string(params[i].second);
    }
    return s;
}

inline std::string to_csv_row(const ExtremalRecord& rec, int precision) {
    std::string s;
    s += to_string(rec.family);
    s += ",";
    s += params_string(rec.params);
    s += ",";
    s += to_string(rec.topology);
    s += ",";
    s += std::to_string(rec.index);
    s += ",";
    s += format_double(rec.value, precision);
    s += ",";
    s += to_string(rec.value_kind);
    s += ",";
    s += format_double(rec.baseline, precision);
    s += ",";
    s += format_double(rec.margin, precision);
    return s;
}

inline std::string to_human(const ExtremalRecord& rec, int precision) {
    std::string s;
    s += std::string("family:     ") + to_string(rec.family) + "\n";
    s += "params:     " + params_string(rec.params) + "\n";
    s += std::string("topology:   ") + to_string(rec.topology) + "\n";
    s += "index:      " + std::to_string(rec.index) + "\n";
    s += "value:      " + format_double(rec.value, precision);
    if (!rec.formula.empty()) s += "   [" + rec.formula + "]";
    s += "\n";
    s += std::string("value_kind: ") + to_string(rec.value_kind) + "\n";
    s += "baseline:   " + format_double(rec.baseline, precision) + "\n";
    s += "margin:     " + format_double(rec.margin, precision) + "\n";
    return s;
}

inline nlohmann::ordered_json to_json(const SweepResult& sw) {
    return nlohmann::ordered_json{{"name", sw.name},
                                  {"pass", sw.pass},
                                  {"worst_margin", sw.worst_margin},
                                  {"worst_location", sw.worst_location}};
}

inline nlohmann::ordered_json to_json(const VerificationReport& rep) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& rec : rep.records) records.push_back(to_json(rec));
    nlohmann::ordered_json sweeps = nlohmann::ordered_json::array();
    for (const auto& sw : rep.sweeps) sweeps.push_back(to_json(sw));
    return nlohmann::ordered_json{{"records", records},
                                  {"sweeps", sweeps},
                                  {"violations", rep.violations},
                                  {"warnings", rep.warnings},
                                  {"verdict", rep.pass ? "pass" : "fail"}};
}

}  // namespace extremal
