#include "wreath/json_io.hpp"

#include <stdexcept>

namespace wreath {

nlohmann::json poly_to_json(const BiPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [key, c] : p.terms()) {
        out.push_back({{"t", key.first}, {"q", key.second}, {"c", c.str()}});
    }
    return out;
}

BiPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    BiPoly p;
    for (const auto& term : j) {
        const int dt = term.at("t").get<int>();
        const int dq = term.at("q").get<int>();
        const BigInt c(term.at("c").get<std::string>());
        p += BiPoly::monomial(dt, dq, c);
    }
    return p;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json params{{"a", report.params.a}, {"ell", report.params.ell}};
    if (report.params.n >= 0) params["n"] = report.params.n;
    if (report.params.trunc_t >= 0) params["S"] = report.params.trunc_t;
    if (report.params.trunc_u >= 0) params["N"] = report.params.trunc_u;
    if (report.params.low) params["L"] = *report.params.low;
    if (!report.note.empty()) params["check"] = report.note;

    nlohmann::json out{{"identity", report.identity},
                       {"params", std::move(params)},
                       {"holds", report.holds}};
    if (report.witness) {
        out["witness"] = {{"t", report.witness->t},
                          {"q", report.witness->q},
                          {"lhs", report.witness->lhs},
                          {"rhs", report.witness->rhs}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

}  // namespace wreath
