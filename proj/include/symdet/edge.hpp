#pragma once

#include "symdet/image.hpp"

#include <vector>

namespace symdet {

/// Binary edge raster. The set of true bits is the edge point set consumed
/// by the symmetry stage. Dimensions always equal the source image's.
struct EdgeMap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    EdgeMap() = default;
    EdgeMap(int w, int h) : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {}

    bool get(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }

    BinaryMask to_mask() const;

    bool operator==(const EdgeMap&) const = default;
};

/// Per-pixel signed gradient components and L2 magnitude. Entries outside
/// the operator's valid region are zero.
struct GradientField {
    int width = 0;
    int height = 0;
    std::vector<double> gx, gy, magnitude;

    GradientField() = default;
    GradientField(int w, int h)
        : width(w), height(h),
          gx(static_cast<std::size_t>(w) * h, 0.0),
          gy(static_cast<std::size_t>(w) * h, 0.0),
          magnitude(static_cast<std::size_t>(w) * h, 0.0) {}

    std::size_t idx(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
};

struct CannyParams {
    double sigma = 1.4;      // Gaussian std-dev in pixels, > 0
    double low_ratio = 0.10; // weak threshold as a fraction of max magnitude
    double high_ratio = 0.20;// strong threshold, low < high <= 1
};

inline constexpr double kDefaultEdgeThreshold = 0.20;

/// Roberts cross: gx = I(x,y) - I(x+1,y+1), gy = I(x+1,y) - I(x,y+1).
/// Defined for x < width-1, y < height-1; the last row and column are never
/// edges. A pixel is an edge iff magnitude >= threshold * max magnitude
/// (a flat image has max magnitude 0 and yields no edges).
/// Requires width, height >= 2 and threshold in (0, 1].
EdgeMap roberts(const GrayImage& img, double threshold);

/// 3x3 Prewitt kernels (columns -1/0/+1 for gx, rows -1/0/+1 for gy).
/// The one-pixel border is never an edge. Thresholding as in roberts.
/// Requires width, height >= 3 and threshold in (0, 1].
EdgeMap prewitt(const GrayImage& img, double threshold);

/// Canny pipeline: Gaussian smoothing (separable, size 2*ceil(3*sigma)+1,
/// weights summing to 1) -> Sobel gradients -> non-maximum suppression with
/// four direction bins (nearest-bin quantization) -> double threshold at
/// high_ratio / low_ratio of the max gradient magnitude -> hysteresis (weak
/// pixels survive iff 8-connected, transitively, to a strong pixel).
///
/// No padding anywhere: pixels where the smoothing kernel, the Sobel stencil
/// or the suppression neighborhood does not fit are never edges, so the edge
/// region is inset by ceil(3*sigma) + 2 on every side. Requires width and
/// height >= kernel size.
EdgeMap canny(const GrayImage& img, const CannyParams& params);

/// Number of edge pixels.
long count_edges(const EdgeMap& em);

// Pipeline intermediates, exposed so each stage is independently testable.

/// Discrete Gaussian taps for radius ceil(3*sigma), normalized to sum 1.
std::vector<double> gaussian_kernel(double sigma);

/// Separable Gaussian smoothing. Values where the kernel does not fit are
/// copies of the input; only the inset region [r, dim-1-r] is smoothed.
std::vector<double> gaussian_smooth(const GrayImage& img, double sigma);

GradientField roberts_gradient(const GrayImage& img);
GradientField prewitt_gradient(const GrayImage& img);

/// Sobel gradients of an already-smoothed field, valid on [margin+1, dim-2-margin].
GradientField sobel_gradient(const std::vector<double>& field, int width, int height, int margin);

/// Hysteresis closure: strong pixels plus every weak pixel 8-connected to a
/// strong one through weak/strong pixels. Throws DimensionMismatch.
BinaryMask hysteresis(const BinaryMask& strong, const BinaryMask& weak);

} // namespace symdet
