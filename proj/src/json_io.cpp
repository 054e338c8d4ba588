#include "superbbw/json_io.hpp"

namespace superbbw {

using nlohmann::json;

json weight_json(const Weight& w) { return w.str(); }

json g0_sum_json(const VirtualG0Sum& v) {
    json rows = json::array();
    for (const auto& entry : v.c)
        rows.push_back(json{{"hw", weight_json(entry.first)}, {"coeff", entry.second}});
    return rows;
}

json character_json(const FormalCharacter& ch) {
    json rows = json::array();
    for (const auto& entry : ch.sorted())
        rows.push_back(json{{"weight", weight_json(entry.first)}, {"mult", entry.second}});
    return rows;
}

namespace {

const char* kind_name(ConstituentKind k) {
    switch (k) {
        case ConstituentKind::SimpleModule: return "simple";
        case ConstituentKind::KacModule: return "kac";
        case ConstituentKind::DualKacModule: return "dual-kac";
        case ConstituentKind::EulerOnly: return "euler-only";
    }
    return "unknown";
}

}  // namespace

json constituent_json(const Constituent& con) {
    json j{{"kind", kind_name(con.kind)}, {"weight", weight_json(con.hw)}};
    if (con.top) j["top"] = weight_json(*con.top);
    if (con.character) j["character"] = g0_sum_json(*con.character);
    if (!con.note.empty()) j["note"] = con.note;
    return j;
}

json reciprocity_json(const ReciprocityReport& rep) {
    json j;
    j["weight"] = weight_json(rep.lam);
    j["outcome"] = rep.outcome == ReciprocityOutcome::Verified ? "Verified" : "NotApplicable";
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    json rows = json::array();
    for (const auto& entry : rep.coefficients)
        rows.push_back(json{{"weight", weight_json(entry.first)}, {"coeff", entry.second}});
    j["coefficients"] = rows;
    json verdicts = json::array();
    for (const auto& entry : rep.verdicts) {
        json v{{"weight", weight_json(entry.first)},
               {"outcome", entry.second.outcome == ReciprocityOutcome::Verified
                               ? "Verified"
                               : "NotApplicable"}};
        if (!entry.second.reason.empty()) v["reason"] = entry.second.reason;
        verdicts.push_back(v);
    }
    j["verdicts"] = verdicts;
    j["ch_p"] = character_json(rep.ch_p);
    j["assembled"] = character_json(rep.assembled);
    return j;
}

}  // namespace superbbw
