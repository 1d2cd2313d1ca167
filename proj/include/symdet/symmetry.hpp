#pragma once

#include "symdet/edge.hpp"

#include <vector>

namespace symdet {

/// Per-row edge centroids. One entry per row that contains at least one edge
/// pixel; rows are strictly increasing and counts are >= 1.
struct CentroidSeries {
    struct Entry {
        int row;         // y index in the source map
        double centroid; // mean x of the row's edge pixels
        int count;       // edge pixels in the row
    };
    std::vector<Entry> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
};

enum class AxisKind { Straight, Curved };

/// Mirror axis of the image: a vertical line x = k, or a polynomial
/// x = c0 + c1*y + ... + cd*y^d fitted to the centroid series. Both fit
/// residuals are carried regardless of kind.
struct SymmetryAxis {
    AxisKind kind = AxisKind::Straight;
    double straight_k = 0.0;
    std::vector<double> coeffs; // x = sum coeffs[d] * y^d (when Curved)
    double rms_straight = 0.0;
    double rms_curved = 0.0;
};

enum class Classification { Symmetric, Distorted };

struct SymmetryVerdict {
    Classification classification = Classification::Symmetric;
    double straight_rms = 0.0;
    /// (rms_straight - rms_curved) / rms_straight, clamped to [0, 1];
    /// zero when the straight fit is already exact.
    double improvement_ratio = 0.0;
};

struct StraightFit {
    double k = 0.0;
    double rms = 0.0;
};

struct CurveFit {
    std::vector<double> coeffs; // c0..cd in original row coordinates
    double rms = 0.0;
};

/// Mean x of each row's edge pixels. Rows without edges are omitted; an
/// empty map yields an empty series.
CentroidSeries edge_centroids(const EdgeMap& em);

/// Least-squares constant fit: k is the mean centroid, rms the root mean
/// square of (Gi - k). Throws EmptySeries on an empty series.
StraightFit fit_straight_axis(const CentroidSeries& cs);

/// Least-squares polynomial fit of degree >= 1 via normal equations, with
/// rows rescaled to [-1, 1] internally for conditioning; coefficients are
/// reported in original row coordinates. Throws InsufficientPoints when
/// degree < 1 or the series has fewer than degree + 1 entries,
/// SingularSystem when the normal matrix is rank deficient.
CurveFit fit_curve_axis(const CentroidSeries& cs, int degree);

/// Axis abscissa at a given row: k for straight axes, the polynomial value
/// for curved ones.
double evaluate_axis(const SymmetryAxis& axis, double row);

/// Fits both models and classifies: Symmetric iff the straight-fit rms is
/// at most tau_rms AND the curve fit improves it by less than tau_improve
/// (relative); otherwise Distorted.
SymmetryVerdict classify_axis(const CentroidSeries& cs, int degree, double tau_rms,
                              double tau_improve);

/// classify_axis plus the fitted axis itself: Straight when the verdict is
/// Symmetric, Curved otherwise. Used by the detection pipeline.
std::pair<SymmetryVerdict, SymmetryAxis> classify_and_fit(const CentroidSeries& cs, int degree,
                                                          double tau_rms, double tau_improve);

inline constexpr int kDefaultCurveDegree = 2;
inline constexpr double kDefaultTauRms = 2.0;
inline constexpr double kDefaultTauImprove = 0.30;

} // namespace symdet
