#include "symdet/report_json.hpp"

namespace symdet {

namespace {

nlohmann::json axis_fields(const SymmetryAxis& axis) {
    nlohmann::json j;
    j["kind"] = to_string(axis.kind);
    if (axis.kind == AxisKind::Straight)
        j["coeffs"] = std::vector<double>{axis.straight_k};
    else
        j["coeffs"] = axis.coeffs;
    j["rms_straight"] = axis.rms_straight;
    j["rms_curved"] = axis.rms_curved;
    return j;
}

} // namespace

nlohmann::json report_to_json(const PipelineResult& result, const PipelineConfig& config) {
    nlohmann::json j;
    j["verdict"] = to_string(result.verdict.classification);
    j["axis"] = axis_fields(result.axis);
    j["brain_area"] = result.report.brain_area;
    j["regions"] = nlohmann::json::array();
    for (const Region& r : result.report.regions) {
        nlohmann::json rj;
        rj["area"] = r.area;
        rj["centroid"] = {{"x", r.centroid_x}, {"y", r.centroid_y}};
        rj["side"] = to_string(r.side);
        rj["mean_intensity"] = r.mean_intensity;
        j["regions"].push_back(std::move(rj));
    }
    j["total_tumor_area"] = result.report.total_tumor_area;
    j["damage_percent"] = result.report.damage_percent;
    j["params"] = {{"operator", to_string(config.op)},
                   {"edge_threshold", config.edge_threshold},
                   {"sigma", config.canny_params.sigma},
                   {"low", config.canny_params.low_ratio},
                   {"high", config.canny_params.high_ratio},
                   {"degree", config.curve_degree},
                   {"tau_rms", config.tau_rms},
                   {"tau_improve", config.tau_improve},
                   {"diff_threshold", config.diff_threshold},
                   {"min_area", config.min_area}};
    return j;
}

nlohmann::json axis_to_json(const SymmetryVerdict& verdict, const SymmetryAxis& axis) {
    nlohmann::json j = axis_fields(axis);
    j["k"] = axis.straight_k;
    j["verdict"] = to_string(verdict.classification);
    j["improvement_ratio"] = verdict.improvement_ratio;
    return j;
}

ParsedReport parse_report(const nlohmann::json& j) {
    ParsedReport p;
    p.verdict = j.at("verdict").get<std::string>();
    p.axis_kind = j.at("axis").at("kind").get<std::string>();
    p.axis_coeffs = j.at("axis").at("coeffs").get<std::vector<double>>();
    p.rms_straight = j.at("axis").at("rms_straight").get<double>();
    p.rms_curved = j.at("axis").at("rms_curved").get<double>();
    p.brain_area = j.at("brain_area").get<long>();
    for (const auto& rj : j.at("regions")) {
        ParsedReport::ParsedRegion r;
        r.area = rj.at("area").get<long>();
        r.centroid_x = rj.at("centroid").at("x").get<double>();
        r.centroid_y = rj.at("centroid").at("y").get<double>();
        r.side = rj.at("side").get<std::string>();
        r.mean_intensity = rj.at("mean_intensity").get<double>();
        p.regions.push_back(std::move(r));
    }
    p.total_tumor_area = j.at("total_tumor_area").get<long>();
    p.damage_percent = j.at("damage_percent").get<double>();
    return p;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace symdet
