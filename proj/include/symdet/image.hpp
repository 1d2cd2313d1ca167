#pragma once

#include "symdet/errors.hpp"

#include <cstdint>
#include <vector>

namespace symdet {

/// 8-bit grayscale raster, row-major. pixel(x, y) = pixels[y * width + x];
/// x is the column index increasing rightward, y the row index increasing
/// downward. Every module in the library shares this convention.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0);
    GrayImage(int w, int h, std::vector<std::uint8_t> px);

    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    void set(int x, int y, std::uint8_t v) { pixels[static_cast<std::size_t>(y) * width + x] = v; }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
    std::size_t size() const { return pixels.size(); }

    bool operator==(const GrayImage&) const = default;
};

/// 8-bit RGB raster, row-major interleaved triples.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // r,g,b,r,g,b,...

    RgbImage() = default;
    RgbImage(int w, int h);

    std::uint8_t channel(int x, int y, int c) const {
        return pixels[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b);

    bool operator==(const RgbImage&) const = default;
};

/// Row-major boolean raster (stored as bytes, 0/1).
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    BinaryMask() = default;
    BinaryMask(int w, int h, bool fill = false);

    bool get(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

    /// Number of set bits.
    long count() const;

    bool operator==(const BinaryMask&) const = default;
};

/// ITU-R BT.601 luma: gray = round(0.299 r + 0.587 g + 0.114 b), half up.
/// Dimensions are preserved; (v, v, v) maps to exactly v.
GrayImage to_grayscale(const RgbImage& img);

} // namespace symdet
