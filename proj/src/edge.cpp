#include "symdet/edge.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace symdet {

// Convolution sums below add mirrored tap pairs before accumulating, so a
// horizontally mirror-symmetric input produces a bitwise mirror-symmetric
// result. The symmetry stage depends on that exactness: a single dropped
// edge pixel would shift a row centroid by tens of pixels.

namespace {

void check_threshold(double t) {
    if (!(t > 0.0) || t > 1.0) throw InvalidThreshold("threshold must be in (0, 1]");
}

EdgeMap threshold_magnitude(const GradientField& g, double threshold) {
    EdgeMap em(g.width, g.height);
    double mx = 0.0;
    for (double m : g.magnitude) mx = std::max(mx, m);
    if (mx <= 0.0) return em; // flat image: no edges at any threshold
    const double cut = threshold * mx;
    for (std::size_t i = 0; i < g.magnitude.size(); ++i)
        em.bits[i] = g.magnitude[i] >= cut ? 1 : 0;
    return em;
}

} // namespace

BinaryMask EdgeMap::to_mask() const {
    BinaryMask m(width, height);
    m.bits = bits;
    return m;
}

GradientField roberts_gradient(const GrayImage& img) {
    GradientField g(img.width, img.height);
    for (int y = 0; y + 1 < img.height; ++y)
        for (int x = 0; x + 1 < img.width; ++x) {
            double gx = static_cast<double>(img.at(x, y)) - img.at(x + 1, y + 1);
            double gy = static_cast<double>(img.at(x + 1, y)) - img.at(x, y + 1);
            std::size_t i = g.idx(x, y);
            g.gx[i] = gx;
            g.gy[i] = gy;
            g.magnitude[i] = std::sqrt(gx * gx + gy * gy);
        }
    return g;
}

GradientField prewitt_gradient(const GrayImage& img) {
    GradientField g(img.width, img.height);
    for (int y = 1; y + 1 < img.height; ++y)
        for (int x = 1; x + 1 < img.width; ++x) {
            auto col = [&](int cx) {
                return (static_cast<double>(img.at(cx, y - 1)) + img.at(cx, y + 1)) +
                       img.at(cx, y);
            };
            auto row = [&](int ry) {
                return (static_cast<double>(img.at(x - 1, ry)) + img.at(x + 1, ry)) +
                       img.at(x, ry);
            };
            double gx = col(x + 1) - col(x - 1);
            double gy = row(y + 1) - row(y - 1);
            std::size_t i = g.idx(x, y);
            g.gx[i] = gx;
            g.gy[i] = gy;
            g.magnitude[i] = std::sqrt(gx * gx + gy * gy);
        }
    return g;
}

EdgeMap roberts(const GrayImage& img, double threshold) {
    check_threshold(threshold);
    if (img.width < 2 || img.height < 2)
        throw ImageTooSmall("roberts needs at least a 2x2 image");
    return threshold_magnitude(roberts_gradient(img), threshold);
}

EdgeMap prewitt(const GrayImage& img, double threshold) {
    check_threshold(threshold);
    if (img.width < 3 || img.height < 3)
        throw ImageTooSmall("prewitt needs at least a 3x3 image");
    return threshold_magnitude(prewitt_gradient(img), threshold);
}

std::vector<double> gaussian_kernel(double sigma) {
    if (!(sigma > 0.0)) throw InvalidParams("sigma must be positive");
    const int r = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> k(static_cast<std::size_t>(2 * r + 1));
    for (int i = -r; i <= r; ++i)
        k[static_cast<std::size_t>(i + r)] = std::exp(-(static_cast<double>(i) * i) /
                                                      (2.0 * sigma * sigma));
    double total = k[static_cast<std::size_t>(r)];
    for (int i = 1; i <= r; ++i)
        total += k[static_cast<std::size_t>(r - i)] + k[static_cast<std::size_t>(r + i)];
    for (double& w : k) w /= total;
    return k;
}

std::vector<double> gaussian_smooth(const GrayImage& img, double sigma) {
    const auto kernel = gaussian_kernel(sigma);
    const int r = static_cast<int>(kernel.size() / 2);
    const int w = img.width, h = img.height;
    const double* kc = kernel.data() + r;

    std::vector<double> horiz(img.size());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            std::size_t i = static_cast<std::size_t>(y) * w + x;
            if (x < r || x >= w - r) {
                horiz[i] = img.pixels[i];
                continue;
            }
            double s = kc[0] * img.pixels[i];
            for (int k = 1; k <= r; ++k)
                s += kc[k] * (static_cast<double>(img.pixels[i - k]) + img.pixels[i + k]);
            horiz[i] = s;
        }

    std::vector<double> out(img.size());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            std::size_t i = static_cast<std::size_t>(y) * w + x;
            if (y < r || y >= h - r) {
                out[i] = horiz[i];
                continue;
            }
            double s = kc[0] * horiz[i];
            for (int k = 1; k <= r; ++k)
                s += kc[k] * (horiz[i - static_cast<std::size_t>(k) * w] +
                              horiz[i + static_cast<std::size_t>(k) * w]);
            out[i] = s;
        }
    return out;
}

GradientField sobel_gradient(const std::vector<double>& field, int width, int height,
                             int margin) {
    GradientField g(width, height);
    auto at = [&](int x, int y) { return field[static_cast<std::size_t>(y) * width + x]; };
    const int lo = margin + 1;
    for (int y = lo; y < height - lo; ++y)
        for (int x = lo; x < width - lo; ++x) {
            auto col = [&](int cx) {
                return (at(cx, y - 1) + at(cx, y + 1)) + 2.0 * at(cx, y);
            };
            auto row = [&](int ry) {
                return (at(x - 1, ry) + at(x + 1, ry)) + 2.0 * at(x, ry);
            };
            double gx = col(x + 1) - col(x - 1);
            double gy = row(y + 1) - row(y - 1);
            std::size_t i = g.idx(x, y);
            g.gx[i] = gx;
            g.gy[i] = gy;
            g.magnitude[i] = std::sqrt(gx * gx + gy * gy);
        }
    return g;
}

BinaryMask hysteresis(const BinaryMask& strong, const BinaryMask& weak) {
    if (strong.width != weak.width || strong.height != weak.height)
        throw DimensionMismatch("hysteresis masks differ in size");
    BinaryMask out(strong.width, strong.height);
    std::vector<std::pair<int, int>> stack;
    for (int y = 0; y < strong.height; ++y)
        for (int x = 0; x < strong.width; ++x) {
            if (!strong.get(x, y) || out.get(x, y)) continue;
            out.set(x, y, true);
            stack.emplace_back(x, y);
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        int nx = cx + dx, ny = cy + dy;
                        if (!out.in_bounds(nx, ny) || out.get(nx, ny)) continue;
                        if (strong.get(nx, ny) || weak.get(nx, ny)) {
                            out.set(nx, ny, true);
                            stack.emplace_back(nx, ny);
                        }
                    }
            }
        }
    return out;
}

EdgeMap canny(const GrayImage& img, const CannyParams& params) {
    if (!(params.sigma > 0.0)) throw InvalidParams("canny sigma must be positive");
    if (!(params.low_ratio > 0.0) || !(params.low_ratio < params.high_ratio) ||
        params.high_ratio > 1.0)
        throw InvalidParams("canny ratios must satisfy 0 < low < high <= 1");
    const int r = static_cast<int>(std::ceil(3.0 * params.sigma));
    const int ksize = 2 * r + 1;
    if (img.width < ksize || img.height < ksize)
        throw ImageTooSmall("canny needs width and height >= " + std::to_string(ksize));

    const auto smoothed = gaussian_smooth(img, params.sigma);
    const GradientField g = sobel_gradient(smoothed, img.width, img.height, r);

    double mx = 0.0;
    for (double m : g.magnitude) mx = std::max(mx, m);
    if (mx <= 0.0) return EdgeMap(img.width, img.height);
    const double hi = params.high_ratio * mx;
    const double lo = params.low_ratio * mx;

    // nearest-bin direction quantization at 0/45/90/135 degrees via the
    // tangents of the 22.5 and 67.5 degree bin boundaries; avoids atan2 so
    // mirrored gradients land in mirrored bins exactly
    constexpr double kTan225 = 0.41421356237309503;
    constexpr double kTan675 = 2.414213562373095;

    BinaryMask strong(img.width, img.height), weak(img.width, img.height);
    const int inset = r + 2; // suppression needs gradient values one pixel out
    for (int y = inset; y < img.height - inset; ++y)
        for (int x = inset; x < img.width - inset; ++x) {
            const std::size_t i = g.idx(x, y);
            const double m = g.magnitude[i];
            if (m <= 0.0) continue;
            const double ax = std::abs(g.gx[i]), ay = std::abs(g.gy[i]);
            int dx = 1, dy = 0;
            if (ay >= kTan675 * ax) {
                dx = 0;
                dy = 1;
            } else if (ay > kTan225 * ax) {
                dy = (g.gx[i] > 0.0) == (g.gy[i] > 0.0) ? 1 : -1;
            }
            if (m < g.magnitude[g.idx(x - dx, y - dy)] ||
                m < g.magnitude[g.idx(x + dx, y + dy)])
                continue;
            if (m >= hi)
                strong.set(x, y, true);
            else if (m >= lo)
                weak.set(x, y, true);
        }

    BinaryMask kept = hysteresis(strong, weak);
    EdgeMap em(img.width, img.height);
    em.bits = std::move(kept.bits);
    return em;
}

long count_edges(const EdgeMap& em) {
    long n = 0;
    for (std::uint8_t b : em.bits) n += b ? 1 : 0;
    return n;
}

} // namespace symdet
