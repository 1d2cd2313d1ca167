#pragma once

#include "symdet/edge.hpp"
#include "symdet/image.hpp"
#include "symdet/mask_ops.hpp"
#include "symdet/symmetry.hpp"

#include <string>
#include <vector>

namespace symdet {

/// Foreground of the slice: largest 8-connected Otsu-above-threshold
/// component with interior holes filled. Denominator of the damage
/// percentage.
struct BrainMask {
    BinaryMask mask;
    long area = 0;
};

enum class Side { Left, Right };

/// One detected anomaly region, entirely on one side of the axis.
struct Region {
    std::vector<Pixel> pixels;
    long area = 0;
    double centroid_x = 0.0;
    double centroid_y = 0.0;
    Side side = Side::Left;
    double mean_intensity = 0.0;
};

struct RegionReport {
    std::vector<Region> regions;
    long total_tumor_area = 0;
    long brain_area = 0;
    double damage_percent = 0.0; // 100 * total_tumor_area / brain_area
};

/// Otsu threshold -> largest above-threshold 8-connected component -> hole
/// fill. Throws EmptyForeground when nothing lies above the threshold.
BrainMask brain_mask(const GrayImage& img);

/// Mirrors the image about the axis: out(x, y) = in(round(2 g(y) - x), y)
/// with nearest-neighbor (round-half-up) sampling; out-of-bounds sources
/// read as 0.
GrayImage reflect_about_axis(const GrayImage& img, const SymmetryAxis& axis);

/// Per-pixel |I - I_mirrored| where both the pixel and its mirror lie inside
/// the brain mask; 0 elsewhere. Throws DimensionMismatch.
GrayImage asymmetry_map(const GrayImage& img, const SymmetryAxis& axis, const BrainMask& mask);

/// Binarize the asymmetry map at diff_threshold, open once with a 3x3
/// element, label 8-connected components, drop those smaller than min_area,
/// then resolve mirror pairs: of each pair keep the side whose mean original
/// intensity deviates more from the brain-mask mean (ties keep the left).
RegionReport detect_regions(const GrayImage& amap, const GrayImage& img, const SymmetryAxis& axis,
                            const BrainMask& mask, int diff_threshold, long min_area);

enum class EdgeOperator { Roberts, Prewitt, Canny };

/// Full parameter set of the detection pipeline. All values default to the
/// library-wide calibration and are surfaced as CLI flags.
struct PipelineConfig {
    EdgeOperator op = EdgeOperator::Canny;
    double edge_threshold = kDefaultEdgeThreshold; // roberts/prewitt
    CannyParams canny_params{};
    int curve_degree = kDefaultCurveDegree;
    double tau_rms = kDefaultTauRms;
    double tau_improve = kDefaultTauImprove;
    int diff_threshold = 30;
    long min_area = 50;
};

/// Everything the pipeline computed, for reporting and overlay rendering.
struct PipelineResult {
    SymmetryVerdict verdict;
    SymmetryAxis axis;
    BrainMask brain;
    RegionReport report;
    EdgeMap edges;
    BinaryMask axis_trace; // one pixel per row at the evaluated axis
    GrayImage asymmetry;
};

/// Two-step pipeline: edge map -> per-row centroids -> axis fit and
/// classification; when the verdict is Distorted the curved axis drives
/// reflection, asymmetry mapping and region detection, otherwise the report
/// is empty. Errors from any stage are rethrown as PipelineError naming the
/// stage.
PipelineResult run_pipeline(const GrayImage& img, const PipelineConfig& config);

/// Union of all region pixels, for overlay rendering.
BinaryMask regions_mask(const RegionReport& report, int width, int height);

const char* to_string(Side s);
const char* to_string(Classification c);
const char* to_string(AxisKind k);
const char* to_string(EdgeOperator op);

} // namespace symdet
