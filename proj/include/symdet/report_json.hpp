#pragma once

#include "symdet/detect.hpp"

#include <json.hpp>

#include <string>

namespace symdet {

/// Detection report schema:
/// { verdict, axis: {kind, coeffs, rms_straight, rms_curved}, brain_area,
///   regions: [{area, centroid, side, mean_intensity}], total_tumor_area,
///   damage_percent, params }
nlohmann::json report_to_json(const PipelineResult& result, const PipelineConfig& config);

/// Axis record emitted by the axis subcommand.
nlohmann::json axis_to_json(const SymmetryVerdict& verdict, const SymmetryAxis& axis);

/// Structured mirror of report_to_json output, for round-trip checks and
/// downstream consumers.
struct ParsedReport {
    std::string verdict;
    std::string axis_kind;
    std::vector<double> axis_coeffs;
    double rms_straight = 0.0;
    double rms_curved = 0.0;
    long brain_area = 0;
    struct ParsedRegion {
        long area = 0;
        double centroid_x = 0.0;
        double centroid_y = 0.0;
        std::string side;
        double mean_intensity = 0.0;
        bool operator==(const ParsedRegion&) const = default;
    };
    std::vector<ParsedRegion> regions;
    long total_tumor_area = 0;
    double damage_percent = 0.0;

    bool operator==(const ParsedReport&) const = default;
};

/// Parses a report produced by report_to_json. Throws nlohmann::json
/// exceptions on schema violations.
ParsedReport parse_report(const nlohmann::json& j);

/// Canonical serialization used everywhere a report or axis record leaves
/// the process (two-space indent, trailing newline).
std::string dump_json(const nlohmann::json& j);

} // namespace symdet
