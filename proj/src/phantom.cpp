#include "symdet/phantom.hpp"

#include "symdet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace symdet {

namespace {

double shear_at(const PhantomSpec& s, double y) {
    const double t = (y - s.center_y) / s.semi_y;
    return s.tilt * (y - s.center_y) + s.bow * (1.0 - t * t);
}

bool in_ellipse(const PhantomSpec& s, int x, int y) {
    const double sx = shear_at(s, y);
    const double u = (x - sx - s.center_x) / s.semi_x;
    const double v = (y - s.center_y) / s.semi_y;
    return u * u + v * v <= 1.0;
}

bool in_lesion(const PhantomSpec& s, int x, int y) {
    const double sx = shear_at(s, y);
    const double dx = x - sx - s.lesion_x;
    const double dy = y - s.lesion_y;
    return dx * dx + dy * dy <= s.lesion_radius * s.lesion_radius;
}

void validate(const PhantomSpec& s) {
    if (s.width <= 0 || s.height <= 0) throw InvalidParams("phantom canvas must be positive");
    if (!(s.semi_x > 0.0) || !(s.semi_y > 0.0))
        throw InvalidParams("ellipse semi-axes must be positive");
    if (s.noise_amplitude < 0) throw InvalidParams("noise amplitude must be >= 0");
    if (s.has_lesion) {
        if (!(s.lesion_radius > 0.0)) throw InvalidParams("lesion radius must be positive");
        const double ex = (std::abs(s.lesion_x - s.center_x) + s.lesion_radius) / s.semi_x;
        const double ey = (std::abs(s.lesion_y - s.center_y) + s.lesion_radius) / s.semi_y;
        if (ex * ex + ey * ey > 1.0)
            throw InvalidParams("lesion disk must lie inside the brain ellipse");
    }
}

} // namespace

double phantom_axis_x(const PhantomSpec& spec, double row) {
    return spec.center_x + shear_at(spec, row);
}

GrayImage render_phantom(const PhantomSpec& spec) {
    validate(spec);
    GrayImage img(spec.width, spec.height, 0);
    // raw mt19937 draws, one per pixel, so the pattern is standard-mandated
    // and independent of geometry
    std::mt19937 rng(spec.seed);
    const int amp = spec.noise_amplitude;
    for (int y = 0; y < spec.height; ++y)
        for (int x = 0; x < spec.width; ++x) {
            int noise = 0;
            if (amp > 0)
                noise = static_cast<int>(rng() % static_cast<std::uint32_t>(2 * amp + 1)) - amp;
            if (!in_ellipse(spec, x, y)) continue;
            int v = spec.intensity;
            if (spec.has_lesion && in_lesion(spec, x, y)) v += spec.lesion_delta;
            v += noise;
            img.set(x, y, static_cast<std::uint8_t>(std::clamp(v, 0, 255)));
        }
    return img;
}

long lesion_pixel_count(const PhantomSpec& spec) {
    validate(spec);
    if (!spec.has_lesion) return 0;
    long n = 0;
    for (int y = 0; y < spec.height; ++y)
        for (int x = 0; x < spec.width; ++x)
            if (in_ellipse(spec, x, y) && in_lesion(spec, x, y)) ++n;
    return n;
}

PhantomSpec clean_symmetric_spec() { return PhantomSpec{}; }

PhantomSpec lesion_spec() {
    PhantomSpec s;
    s.has_lesion = true;
    s.lesion_x = 168.0; // 40 px right of the midline
    s.lesion_y = 128.0;
    s.lesion_radius = 12.0;
    s.lesion_delta = 60;
    return s;
}

std::vector<CorpusEntry> standard_corpus() {
    std::vector<CorpusEntry> corpus;

    // MR-like noise (amplitude >= 35) on every entry: the small Roberts
    // kernel responds to it far more than the averaging Prewitt kernel, and
    // smoothing plus suppression leaves Canny with boundary chains only, so
    // per-image counts order roberts > prewitt > canny

    PhantomSpec sym_a = clean_symmetric_spec();
    sym_a.noise_amplitude = 35;
    sym_a.seed = 11;
    corpus.push_back({"01_symmetric_a.pgm", sym_a});

    PhantomSpec sym_b = clean_symmetric_spec();
    sym_b.noise_amplitude = 45;
    sym_b.seed = 22;
    corpus.push_back({"02_symmetric_b.pgm", sym_b});

    PhantomSpec bright = lesion_spec();
    bright.noise_amplitude = 38;
    bright.seed = 33;
    corpus.push_back({"03_lesion_bright.pgm", bright});

    PhantomSpec dark = clean_symmetric_spec();
    dark.has_lesion = true;
    dark.lesion_x = 96.0;
    dark.lesion_y = 104.0;
    dark.lesion_radius = 16.0;
    dark.lesion_delta = -60;
    dark.noise_amplitude = 38;
    dark.seed = 44;
    corpus.push_back({"04_lesion_dark.pgm", dark});

    PhantomSpec bowed = clean_symmetric_spec();
    bowed.bow = 6.0;
    bowed.noise_amplitude = 36;
    bowed.seed = 55;
    corpus.push_back({"05_bowed.pgm", bowed});

    PhantomSpec tilted = clean_symmetric_spec();
    tilted.tilt = 0.04;
    tilted.has_lesion = true;
    tilted.lesion_x = 150.0;
    tilted.lesion_y = 150.0;
    tilted.lesion_radius = 10.0;
    tilted.lesion_delta = 45;
    tilted.noise_amplitude = 42;
    tilted.seed = 66;
    corpus.push_back({"06_tilted_lesion.pgm", tilted});

    return corpus;
}

} // namespace symdet
