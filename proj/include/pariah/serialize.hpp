#pragma once

#include <json.hpp>

#include "pariah/onan.hpp"

namespace pariah::onan {

/// Flat JSON records; big integers are carried as decimal strings so that
/// consumers never face 64-bit overflow.
inline void to_json(nlohmann::json& j, const SelmerVerdict& v) {
    j = nlohmann::json{{"D", v.D},
                       {"admissible", v.admissible},
                       {"h", v.h},
                       {"c3a_series", v.c3a_series.get_str()},
                       {"congruence", v.congruence},
                       {"sel5_nontrivial", v.sel5_nontrivial}};
    if (v.c3a_traces) j["c3a_traces"] = v.c3a_traces->get_str();
    if (v.l_twist) {
        j["l_twist"] = {{"value", v.l_twist->value},
                        {"terms_used", v.l_twist->terms_used},
                        {"sign", v.l_twist->sign},
                        {"tail_estimate", v.l_twist->tail_estimate}};
    }
    switch (v.sha_statement) {
        case ShaStatement::NotApplicable: j["sha_statement"] = "not_applicable"; break;
        case ShaStatement::Applies:
            j["sha_statement"] = "applies";
            j["sha_mod5_divides"] = v.sha_mod5_divides;
            break;
    }
}

inline void from_json(const nlohmann::json& j, SelmerVerdict& v) {
    v = SelmerVerdict{};
    v.D = j.at("D").get<long>();
    v.admissible = j.at("admissible").get<bool>();
    v.h = j.at("h").get<long>();
    v.c3a_series = Int(j.at("c3a_series").get<std::string>());
    v.congruence = j.at("congruence").get<int>();
    v.sel5_nontrivial = j.at("sel5_nontrivial").get<bool>();
    if (j.contains("c3a_traces")) v.c3a_traces = Int(j.at("c3a_traces").get<std::string>());
    if (j.contains("l_twist")) {
        lfunc::LValueReport r;
        r.value = j.at("l_twist").at("value").get<double>();
        r.terms_used = j.at("l_twist").at("terms_used").get<long>();
        r.sign = j.at("l_twist").at("sign").get<int>();
        r.tail_estimate = j.at("l_twist").at("tail_estimate").get<double>();
        v.l_twist = r;
    }
    std::string sha = j.at("sha_statement").get<std::string>();
    if (sha == "applies") {
        v.sha_statement = ShaStatement::Applies;
        v.sha_mod5_divides = j.at("sha_mod5_divides").get<bool>();
    } else {
        v.sha_statement = ShaStatement::NotApplicable;
    }
}

}  // namespace pariah::onan
