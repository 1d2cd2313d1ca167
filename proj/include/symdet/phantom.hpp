#pragma once

#include "symdet/image.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace symdet {

/// Synthetic head slice: a bright ellipse on black background, optionally
/// with a lesion disk, a per-row horizontal shear of the anatomy (linear
/// tilt and/or parabolic bow of the midline), and seeded uniform noise
/// inside the ellipse. Rendering is deterministic across platforms for a
/// fixed spec.
struct PhantomSpec {
    int width = 256;
    int height = 256;
    double center_x = 128.0;
    double center_y = 128.0;
    double semi_x = 90.0;
    double semi_y = 110.0;
    std::uint8_t intensity = 180;

    bool has_lesion = false;
    double lesion_x = 0.0;
    double lesion_y = 0.0;
    double lesion_radius = 0.0;
    int lesion_delta = 0; // signed intensity shift, result clamped to [0,255]

    double tilt = 0.0;  // px of midline shift per px of row distance from center
    double bow = 0.0;   // px of midline bow at the ellipse's vertical center

    std::uint32_t seed = 0;
    int noise_amplitude = 0; // uniform in [-amp, amp], ellipse interior only
};

/// Renders the phantom. Throws InvalidParams when the spec violates its
/// invariants (non-positive canvas or axes, lesion not inside the ellipse).
GrayImage render_phantom(const PhantomSpec& spec);

/// Number of pixels the lesion disk shifts, counted by the same
/// rasterization the renderer uses. Zero when there is no lesion.
long lesion_pixel_count(const PhantomSpec& spec);

/// Midline abscissa of the sheared anatomy at a given row.
double phantom_axis_x(const PhantomSpec& spec, double row);

struct CorpusEntry {
    std::string name; // output filename, sorts in corpus order
    PhantomSpec spec;
};

/// The six-image phantom corpus used by the benchmark and the test suites.
/// All entries carry MR-like noise; geometry varies from clean symmetric to
/// lesioned and bowed.
std::vector<CorpusEntry> standard_corpus();

/// The noise-free centered ellipse used as the symmetric null case.
PhantomSpec clean_symmetric_spec();

/// The noise-free lesion phantom (disk radius 12, delta +60, 40 px off
/// axis) used for lesion-recovery checks.
PhantomSpec lesion_spec();

} // namespace symdet
