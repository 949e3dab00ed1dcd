#pragma once

#include <string>
#include <utility>
#include <vector>

namespace extremal {

enum class Family { Otsuki, Lawson, BipolarLawson, BipolarOtsuki, Clifford };
enum class Topology { Torus, KleinBottle };
enum class ValueKind { Exact, UpperBound };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::Otsuki: return "Otsuki";
        case Family::Lawson: return "Lawson";
        case Family::BipolarLawson: return "BipolarLawson";
        case Family::BipolarOtsuki: return "BipolarOtsuki";
        case Family::Clifford: return "Clifford";
    }
    return "?";
}

inline const char* to_string(Topology t) {
    return t == Topology::Torus ? "torus" : "klein";
}

inline const char* to_string(ValueKind v) {
    return v == ValueKind::Exact ? "exact" : "upper-bound";
}

// Ordered parameter list, e.g. {{"p",2},{"q",3}}; order is part of the
// serialized schema.
using Params = std::vector<std::pair<std::string, long long>>;

// One extremal metric: the functional index i, the value of Lambda_i (or the
// paper's closed-form upper bound, per value_kind), the applicable lower
// bound for sup Lambda_i on the same topology, and the margin between them.
struct ExtremalRecord {
    Family family;
    Params params;
    Topology topology;
    long long index = 0;
    double value = 0.0;
    ValueKind value_kind = ValueKind::Exact;
    double baseline = 0.0;
    double margin = 0.0;        // baseline - value
    std::string formula;        // closed form, for human-readable output
};

}  // namespace extremal
