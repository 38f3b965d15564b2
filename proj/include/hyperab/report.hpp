#pragma once

// JSON and plain-text renderings of results. Keys come out sorted; integers
// that do not fit in 64 bits are written as decimal strings.

#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hyperab/battery.hpp"
#include "hyperab/conditions.hpp"
#include "hyperab/hodge.hpp"
#include "hyperab/sequences.hpp"
#include "hyperab/wedge.hpp"

namespace hyperab {

using Json = nlohmann::json;

inline Json json_int(const ExactInt& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(x));
    return Json(x.str());
}

inline Json json_rational(const ExactRational& x) { return Json(to_string(x)); }

inline Json to_json(const ClaimedRange& r) {
    Json j;
    j["lo"] = r.lo;
    j["hi"] = r.hi ? Json(*r.hi) : Json(nullptr);
    return j;
}

inline Json to_json(const Certificate& c) {
    Json j;
    j["name"] = c.name;
    j["statement"] = c.statement;
    j["claimed_range"] = to_json(c.claimed);
    j["finite_checked"] = c.finite_checked ? Json::array({c.finite_checked->first, c.finite_checked->second}) : Json(nullptr);
    j["asymptotic_threshold"] = c.asymptotic_threshold ? Json(*c.asymptotic_threshold) : Json(nullptr);
    j["status"] = to_string(c.status);
    if (c.counterexample) {
        Json w;
        w["n"] = *c.counterexample;
        if (c.counterexample_r) w["r"] = *c.counterexample_r;
        j["counterexample"] = w;
    }
    j["trace"] = c.trace;
    return j;
}

inline Json to_json(const BatteryReport& r) {
    Json j;
    j["certificates"] = Json::array();
    for (const auto& c : r.certificates) j["certificates"].push_back(to_json(c));
    j["pass"] = r.all_pass();
    return j;
}

inline std::string format_range(const std::optional<std::pair<long, long>>& r) {
    if (!r) return "-";
    return std::to_string(r->first) + ".." + std::to_string(r->second);
}

inline std::string to_text(const BatteryReport& r) {
    std::ostringstream os;
    os << std::left << std::setw(20) << "name" << std::setw(18) << "claimed" << std::setw(10) << "finite"
       << std::setw(6) << "N0" << "status\n";
    for (const auto& c : r.certificates) {
        os << std::setw(20) << c.name << std::setw(18) << c.claimed.str() << std::setw(10)
           << format_range(c.finite_checked) << std::setw(6)
           << (c.asymptotic_threshold ? std::to_string(*c.asymptotic_threshold) : std::string("-")) << to_string(c.status);
        if (c.counterexample) os << " (n = " << *c.counterexample << ")";
        os << "\n";
    }
    os << (r.all_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

inline Json to_json(const WeightFunction& m_h) {
    Json j = Json::array();
    for (const auto& [i, v] : m_h) j.push_back(Json::array({i, v}));
    return j;
}

inline Json to_json(const WedgeSolution& s, WedgeCase c) {
    Json j;
    j["n"] = s.n;
    j["d"] = json_int(s.d);
    j["k"] = s.k;
    j["m"] = s.m();
    j["m_H"] = to_json(s.m_h);
    j["s"] = s.s;
    j["case"] = to_string(c);
    return j;
}

inline Json to_json(const AdjointHodgeData& a) {
    Json j;
    j["group"] = to_string(a.group);
    j["N"] = json_int(a.N);
    j["dim_H"] = json_int(a.dim_h);
    j["torus_rank"] = json_int(a.torus_rank);
    Json adj = Json::object();
    for (const auto& [p, v] : a.adjoint) adj[std::to_string(p)] = json_int(v);
    j["adjoint"] = adj;
    return j;
}

inline Json to_json(const HodgeProfile& p) {
    Json j;
    j["n"] = p.base.n;
    j["d"] = json_int(p.base.d);
    Json w = Json::array();
    for (const auto& x : p.weights) w.push_back(json_int(x));
    j["multiplicities"] = w;
    return j;
}

}  // namespace hyperab
