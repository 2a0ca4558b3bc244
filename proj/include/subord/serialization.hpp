#pragma once

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#include "subord/conditions.hpp"
#include "subord/domains.hpp"
#include "subord/power_series.hpp"
#include "subord/verifier.hpp"

namespace subord {

using Json = nlohmann::ordered_json;

/// Round a double to 9 significant digits. All floating output goes through
/// this, keeping emitted artifacts byte-reproducible across runs.
inline double round9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return std::strtod(buf, nullptr);
}

inline Json to_json(const PowerSeries& s) {
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k)
        coeffs.push_back(Json::array({s.coeff(k).real(), s.coeff(k).imag()}));
    return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

inline PowerSeries power_series_from_json(const Json& j) {
    const int order = j.at("order").get<int>();
    const Json& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != order + 1)
        throw std::invalid_argument("power series json: coeffs length must be order + 1");
    std::vector<Complex> c;
    c.reserve(coeffs.size());
    for (const Json& pair : coeffs)
        c.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    return PowerSeries(std::move(c));
}

inline const char* membership_name(Membership m) {
    switch (m) {
        case Membership::Inside: return "inside";
        case Membership::Outside: return "outside";
        case Membership::Boundary: return "boundary";
    }
    return "?";
}

inline Json to_json(const MembershipVerdict& v) {
    return Json{{"status", membership_name(v.status)},
                {"distance_hint", round9(v.distance_hint)},
                {"flags", v.flags}};
}

inline Json to_json(const EnclosingDisk& d) {
    return Json{{"center", Json::array({round9(d.center.real()), round9(d.center.imag())})},
                {"radius", round9(d.radius)}};
}

inline Json to_json(const TheoremId& id) {
    Json j{{"target", target_name(id.target)},
           {"order", id.order},
           {"h", TargetDomain::of_kind(id.h_kind, id.janowski ? id.janowski->first : 1.0,
                                       id.janowski ? id.janowski->second : 0.0)
                     .name()}};
    if (id.janowski) {
        j["C"] = round9(id.janowski->first);
        j["D"] = round9(id.janowski->second);
    }
    return j;
}

inline Json to_json(const ConditionReport& r) {
    return Json{{"theorem", to_json(r.theorem)},
                {"holds", r.holds},
                {"lhs", round9(r.lhs)},
                {"rhs", round9(r.rhs)},
                {"margin", round9(r.margin)},
                {"hypothesis_flags", r.hypothesis_flags}};
}

inline Json to_json(const SubordinationVerdict& v) {
    Json j{{"holds", v.holds},
           {"checked_points", v.checked_points},
           {"boundary_hits", v.boundary_hits}};
    if (v.witness)
        j["witness"] = Json::array({round9(v.witness->real()), round9(v.witness->imag())});
    return j;
}

inline Json to_json(const ImplicationReport& r) {
    Json violations = Json::array();
    for (const auto& [index, witness] : r.violations)
        violations.push_back(Json{
            {"family_index", index},
            {"witness", Json::array({round9(witness.real()), round9(witness.imag())})}});
    return Json{{"family_size", r.family_size},
                {"premise_true_count", r.premise_true_count},
                {"violations", std::move(violations)},
                {"condition", to_json(r.condition)}};
}

inline Json to_json(const IdentityReport& r) {
    Json j{{"which", r.which == IdentityKind::Sf ? "sf" : "thetaf"},
           {"trials", r.trials},
           {"degree", r.degree},
           {"seed", r.seed},
           {"compared_coefficients", r.compared_coefficients},
           {"max_deviation", round9(r.max_deviation)}};
    if (r.which == IdentityKind::Thetaf) j["baseline_residual"] = round9(r.baseline_residual);
    return j;
}

} // namespace subord
