#include "cpgenus/jsonio.hpp"

namespace cpgenus {

Json series_to_json(const LaurentSeries& s) {
    Json coeffs = Json::object();
    for (const auto& [k, c] : s.coeffs()) coeffs[std::to_string(k)] = c.str();
    return Json{{"valuation", s.valuation()}, {"trunc", s.trunc()}, {"coeffs", std::move(coeffs)}};
}

LaurentSeries series_from_json(const VarSet& vs, const Json& j) {
    if (!j.contains("trunc") || !j.contains("coeffs"))
        throw usage_error("series JSON needs 'trunc' and 'coeffs'");
    std::map<int, Poly> cs;
    for (const auto& [key, value] : j.at("coeffs").items())
        cs.emplace(std::stoi(key), Poly::parse(vs, value.get<std::string>()));
    LaurentSeries s = LaurentSeries::from_coeffs(vs, std::move(cs), j.at("trunc").get<int>());
    if (j.contains("valuation") && j.at("valuation").get<int>() != s.valuation())
        throw usage_error("series JSON valuation does not match coefficients");
    return s;
}

namespace {

Json bound_json(int v) {
    if (v >= kUnbounded / 2) return Json();        // null = unbounded
    return v;
}

} // namespace

Json region_to_json(const BiRegion& r) {
    return Json{{"i_min", r.i_min},
                {"j_min", r.j_min},
                {"j_max", bound_json(r.j_max)},
                {"deg_min", r.deg_min},
                {"deg_max", bound_json(r.deg_max)}};
}

Json report_to_json(const VerifyReport& r, bool timing) {
    Json nonzero = Json::array();
    for (const auto& [i, j, poly] : r.nonzero)
        nonzero.push_back(Json{{"i", i}, {"j", j}, {"value", poly}});
    Json out{{"command", "verify"},
             {"family", r.family},
             {"order", r.order},
             {"constant_C", r.constant.str()},
             {"f_trunc", r.f_trunc},
             {"q_trunc", r.q_trunc},
             {"shift_jmax", r.shift_jmax},
             {"region", region_to_json(r.region)},
             {"checked", r.checked},
             {"nonzero", std::move(nonzero)},
             {"verified", r.verified}};
    if (timing) out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

Json classification_to_json(const Classification& c) {
    Json out{{"command", "classify"},
             {"C", c.c_value.str()},
             {"K", c.k_value.str()},
             {"family", family_tag_name(c.tag)}};
    if (c.todd_params)
        out["todd"] = Json{{"alpha_plus_beta", c.todd_params->first.str()},
                           {"alpha_times_beta", c.todd_params->second.str()}};
    if (c.elliptic_params)
        out["elliptic"] = Json{{"a", c.elliptic_params->first.str()},
                               {"b", c.elliptic_params->second.str()}};
    return out;
}

} // namespace cpgenus
