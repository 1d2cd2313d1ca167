#pragma once

#include "symdet/image.hpp"

#include <vector>

namespace symdet {

struct Pixel {
    int x;
    int y;
    bool operator==(const Pixel&) const = default;
};

/// 3x3 box erosion; out-of-bounds neighbors count as background, so border
/// pixels never survive.
BinaryMask erode3(const BinaryMask& m);

/// 3x3 box dilation.
BinaryMask dilate3(const BinaryMask& m);

/// One pass of morphological opening (erode3 then dilate3).
BinaryMask open3(const BinaryMask& m);

/// Connected components in row-major discovery order; each component's
/// pixels are in scan order. connectivity is 4 or 8.
std::vector<std::vector<Pixel>> label_components(const BinaryMask& m, int connectivity);

/// Fills holes: background components (4-connected) that do not touch the
/// image border become foreground.
BinaryMask fill_holes(const BinaryMask& m);

} // namespace symdet
