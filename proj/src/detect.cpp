#include "symdet/detect.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace symdet {

namespace {

int otsu_threshold(const GrayImage& img) {
    std::array<long, 256> hist{};
    for (std::uint8_t v : img.pixels) ++hist[v];
    const double total = static_cast<double>(img.size());
    double sum_all = 0.0;
    for (int v = 0; v < 256; ++v) sum_all += static_cast<double>(v) * hist[v];

    double sum_bg = 0.0, w_bg = 0.0;
    double best_var = -1.0;
    int best_t = 0;
    for (int t = 0; t < 256; ++t) {
        w_bg += static_cast<double>(hist[t]);
        if (w_bg == 0.0) continue;
        const double w_fg = total - w_bg;
        if (w_fg == 0.0) break;
        sum_bg += static_cast<double>(t) * hist[t];
        const double mean_bg = sum_bg / w_bg;
        const double mean_fg = (sum_all - sum_bg) / w_fg;
        const double between = w_bg * w_fg * (mean_bg - mean_fg) * (mean_bg - mean_fg);
        if (between > best_var) {
            best_var = between;
            best_t = t;
        }
    }
    return best_t;
}

int mirror_x(double axis_x, int x) {
    return static_cast<int>(std::floor(2.0 * axis_x - x + 0.5));
}

struct ComponentInfo {
    std::vector<Pixel> pixels;
    double mean_intensity = 0.0;
    long left_count = 0;
    long right_count = 0;
};

} // namespace

BrainMask brain_mask(const GrayImage& img) {
    const int t = otsu_threshold(img);
    BinaryMask above(img.width, img.height);
    long n_above = 0;
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        if (img.pixels[i] > t) {
            above.bits[i] = 1;
            ++n_above;
        }
    if (n_above == 0) throw EmptyForeground("no pixel above the Otsu threshold");

    auto comps = label_components(above, 8);
    const auto largest = std::max_element(
        comps.begin(), comps.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });

    BinaryMask mask(img.width, img.height);
    for (const Pixel& p : *largest) mask.set(p.x, p.y, true);
    mask = fill_holes(mask);

    BrainMask bm;
    bm.mask = std::move(mask);
    bm.area = bm.mask.count();
    return bm;
}

GrayImage reflect_about_axis(const GrayImage& img, const SymmetryAxis& axis) {
    GrayImage out(img.width, img.height, 0);
    for (int y = 0; y < img.height; ++y) {
        const double g = evaluate_axis(axis, y);
        for (int x = 0; x < img.width; ++x) {
            const int sx = mirror_x(g, x);
            if (sx >= 0 && sx < img.width) out.set(x, y, img.at(sx, y));
        }
    }
    return out;
}

GrayImage asymmetry_map(const GrayImage& img, const SymmetryAxis& axis, const BrainMask& mask) {
    if (mask.mask.width != img.width || mask.mask.height != img.height)
        throw DimensionMismatch("brain mask dimensions differ from image");
    GrayImage out(img.width, img.height, 0);
    for (int y = 0; y < img.height; ++y) {
        const double g = evaluate_axis(axis, y);
        for (int x = 0; x < img.width; ++x) {
            if (!mask.mask.get(x, y)) continue;
            const int sx = mirror_x(g, x);
            if (sx < 0 || sx >= img.width || !mask.mask.get(sx, y)) continue;
            out.set(x, y, static_cast<std::uint8_t>(
                              std::abs(static_cast<int>(img.at(x, y)) - img.at(sx, y))));
        }
    }
    return out;
}

RegionReport detect_regions(const GrayImage& amap, const GrayImage& img,
                            const SymmetryAxis& axis, const BrainMask& mask,
                            int diff_threshold, long min_area) {
    if (amap.width != img.width || amap.height != img.height ||
        mask.mask.width != img.width || mask.mask.height != img.height)
        throw DimensionMismatch("asymmetry map, image and mask must agree in size");
    if (diff_threshold < 1 || diff_threshold > 255)
        throw InvalidParams("diff_threshold must be in [1, 255]");
    if (min_area < 1) throw InvalidParams("min_area must be >= 1");

    BinaryMask bin(amap.width, amap.height);
    for (std::size_t i = 0; i < amap.pixels.size(); ++i)
        bin.bits[i] = amap.pixels[i] >= diff_threshold ? 1 : 0;
    const BinaryMask opened = open3(bin);

    auto raw = label_components(opened, 8);
    std::vector<ComponentInfo> comps;
    std::vector<int> owner(amap.pixels.size(), -1);
    for (auto& pixels : raw) {
        if (static_cast<long>(pixels.size()) < min_area) continue;
        ComponentInfo info;
        double sum = 0.0;
        for (const Pixel& p : pixels) {
            sum += img.at(p.x, p.y);
            const double g = evaluate_axis(axis, p.y);
            if (p.x < g) ++info.left_count;
            else if (p.x > g) ++info.right_count;
            owner[static_cast<std::size_t>(p.y) * amap.width + p.x] =
                static_cast<int>(comps.size());
        }
        info.mean_intensity = sum / static_cast<double>(pixels.size());
        info.pixels = std::move(pixels);
        comps.push_back(std::move(info));
    }

    double brain_sum = 0.0;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (mask.mask.get(x, y)) brain_sum += img.at(x, y);
    const double brain_mean = mask.area > 0 ? brain_sum / static_cast<double>(mask.area) : 0.0;

    auto side_of = [](const ComponentInfo& c) {
        return c.left_count >= c.right_count ? Side::Left : Side::Right;
    };
    auto deviation = [&](const ComponentInfo& c) {
        return std::abs(c.mean_intensity - brain_mean);
    };

    // resolve mirror pairs: the partner of a component is the one its
    // reflection overlaps most
    std::vector<char> claimed(comps.size(), 0);
    std::vector<std::size_t> keepers;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (claimed[i]) continue;
        claimed[i] = 1;
        std::vector<long> overlap(comps.size(), 0);
        for (const Pixel& p : comps[i].pixels) {
            const double g = evaluate_axis(axis, p.y);
            const int mx = mirror_x(g, p.x);
            if (mx < 0 || mx >= amap.width) continue;
            const int o = owner[static_cast<std::size_t>(p.y) * amap.width + mx];
            if (o >= 0 && static_cast<std::size_t>(o) != i && !claimed[static_cast<std::size_t>(o)])
                ++overlap[static_cast<std::size_t>(o)];
        }
        std::size_t partner = i;
        long best = 0;
        for (std::size_t j = 0; j < comps.size(); ++j)
            if (overlap[j] > best) {
                best = overlap[j];
                partner = j;
            }
        if (partner == i) {
            keepers.push_back(i); // unpaired (or straddling) component
            continue;
        }
        claimed[partner] = 1;
        const double di = deviation(comps[i]);
        const double dj = deviation(comps[partner]);
        std::size_t keep;
        if (di > dj)
            keep = i;
        else if (dj > di)
            keep = partner;
        else
            keep = side_of(comps[i]) == Side::Left ? i : partner; // tie goes left
        keepers.push_back(keep);
    }

    RegionReport report;
    report.brain_area = mask.area;
    for (std::size_t k : keepers) {
        const ComponentInfo& c = comps[k];
        Region reg;
        reg.side = side_of(c);
        double sx = 0.0, sy = 0.0, si = 0.0;
        for (const Pixel& p : c.pixels) {
            const double g = evaluate_axis(axis, p.y);
            const bool on_side = reg.side == Side::Left ? (p.x < g) : (p.x > g);
            if (!on_side) continue; // straddlers are clipped to the declared side
            reg.pixels.push_back(p);
            sx += p.x;
            sy += p.y;
            si += img.at(p.x, p.y);
        }
        reg.area = static_cast<long>(reg.pixels.size());
        if (reg.area < min_area) continue;
        reg.centroid_x = sx / static_cast<double>(reg.area);
        reg.centroid_y = sy / static_cast<double>(reg.area);
        reg.mean_intensity = si / static_cast<double>(reg.area);
        report.total_tumor_area += reg.area;
        report.regions.push_back(std::move(reg));
    }
    report.damage_percent =
        report.brain_area > 0
            ? 100.0 * static_cast<double>(report.total_tumor_area) / report.brain_area
            : 0.0;
    return report;
}

BinaryMask regions_mask(const RegionReport& report, int width, int height) {
    BinaryMask m(width, height);
    for (const Region& r : report.regions)
        for (const Pixel& p : r.pixels) m.set(p.x, p.y, true);
    return m;
}

namespace {

template <typename F>
auto stage(const char* name, F&& fn) {
    try {
        return fn();
    } catch (const PipelineError&) {
        throw;
    } catch (const Error& e) {
        throw PipelineError(name, e);
    }
}

} // namespace

PipelineResult run_pipeline(const GrayImage& img, const PipelineConfig& config) {
    PipelineResult res;

    res.edges = stage("edge_detection", [&] {
        switch (config.op) {
        case EdgeOperator::Roberts: return roberts(img, config.edge_threshold);
        case EdgeOperator::Prewitt: return prewitt(img, config.edge_threshold);
        case EdgeOperator::Canny: return canny(img, config.canny_params);
        }
        throw InvalidParams("unknown edge operator");
    });

    const CentroidSeries cs = edge_centroids(res.edges);

    std::tie(res.verdict, res.axis) = stage("axis_fit", [&] {
        return classify_and_fit(cs, config.curve_degree, config.tau_rms, config.tau_improve);
    });

    res.brain = stage("brain_mask", [&] { return brain_mask(img); });

    res.axis_trace = BinaryMask(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        const int x = static_cast<int>(std::floor(evaluate_axis(res.axis, y) + 0.5));
        if (x >= 0 && x < img.width) res.axis_trace.set(x, y, true);
    }

    if (res.verdict.classification == Classification::Distorted) {
        res.asymmetry = stage("asymmetry_map",
                              [&] { return asymmetry_map(img, res.axis, res.brain); });
        res.report = stage("region_detection", [&] {
            return detect_regions(res.asymmetry, img, res.axis, res.brain,
                                  config.diff_threshold, config.min_area);
        });
    } else {
        res.asymmetry = GrayImage(img.width, img.height, 0);
        res.report.brain_area = res.brain.area;
        res.report.total_tumor_area = 0;
        res.report.damage_percent = 0.0;
    }
    return res;
}

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

const char* to_string(Classification c) {
    return c == Classification::Symmetric ? "symmetric" : "distorted";
}

const char* to_string(AxisKind k) { return k == AxisKind::Straight ? "straight" : "curved"; }

const char* to_string(EdgeOperator op) {
    switch (op) {
    case EdgeOperator::Roberts: return "roberts";
    case EdgeOperator::Prewitt: return "prewitt";
    case EdgeOperator::Canny: return "canny";
    }
    return "unknown";
}

} // namespace symdet
