#pragma once

#include "weylhom/criterion.hpp"
#include "weylhom/ext_classical.hpp"
#include "weylhom/homspace.hpp"
#include "weylhom/loubert.hpp"
#include "weylhom/tableaux.hpp"

#include <json.hpp>

namespace weylhom {

// JSON views of the report types. nlohmann::json keeps object keys sorted,
// which is what the stable-output contract wants.

inline nlohmann::json to_json(const ConditionDiag& c) {
    return {{"description", c.description},
            {"value", c.value.get_str()},
            {"divisible", c.divisible}};
}

inline nlohmann::json to_json(const HomReport& rep) {
    nlohmann::json j;
    j["dim"] = rep.dim;
    j["case"] = rep.case_tag;
    j["conditions"] = nlohmann::json::array();
    for (const auto& c : rep.conditions)
        j["conditions"].push_back(to_json(c));
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [idx, val] : rep.witness)
        w[leg_index_label(idx)] = val;
    j["witness"] = w;
    return j;
}

inline nlohmann::json to_json(const TableauCombo& combo) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [t, c] : combo.terms())
        terms.push_back({{"coeff", c.get_str()}, {"tableau", t.to_string()}});
    return terms;
}

inline nlohmann::json to_json(const KernelResult& k) {
    nlohmann::json j;
    j["dim"] = k.dim;
    j["kernel"] = k.basis;
    return j;
}

inline nlohmann::json to_json(const LoubertResult& r) {
    nlohmann::json j;
    j["dim"] = r.dim;
    switch (r.kase.tag) {
    case LoubertCase::Tag::none:
        j["case"] = "none";
        break;
    case LoubertCase::Tag::i:
        j["case"] = "i";
        break;
    case LoubertCase::Tag::ii:
        j["case"] = "ii";
        break;
    case LoubertCase::Tag::iii:
        j["case"] = "iii";
        break;
    }
    if (r.kase.tag != LoubertCase::Tag::none) {
        j["n_prime"] = r.kase.n_prime;
        j["m_prime"] = r.kase.m_prime;
        j["a"] = r.kase.a;
    }
    return j;
}

} // namespace weylhom
