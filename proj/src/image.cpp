#include "symdet/image.hpp"

#include <algorithm>
#include <cmath>

namespace symdet {

namespace {

void check_dims(int w, int h) {
    if (w <= 0 || h <= 0) throw InvalidParams("image dimensions must be positive");
}

} // namespace

GrayImage::GrayImage(int w, int h, std::uint8_t fill) : width(w), height(h) {
    check_dims(w, h);
    pixels.assign(static_cast<std::size_t>(w) * h, fill);
}

GrayImage::GrayImage(int w, int h, std::vector<std::uint8_t> px)
    : width(w), height(h), pixels(std::move(px)) {
    check_dims(w, h);
    if (pixels.size() != static_cast<std::size_t>(w) * h)
        throw DimensionMismatch("pixel buffer does not match width*height");
}

RgbImage::RgbImage(int w, int h) : width(w), height(h) {
    check_dims(w, h);
    pixels.assign(static_cast<std::size_t>(w) * h * 3, 0);
}

void RgbImage::set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    pixels[i] = r;
    pixels[i + 1] = g;
    pixels[i + 2] = b;
}

BinaryMask::BinaryMask(int w, int h, bool fill) : width(w), height(h) {
    check_dims(w, h);
    bits.assign(static_cast<std::size_t>(w) * h, fill ? 1 : 0);
}

long BinaryMask::count() const {
    long n = 0;
    for (std::uint8_t b : bits) n += b ? 1 : 0;
    return n;
}

GrayImage to_grayscale(const RgbImage& img) {
    GrayImage out(img.width, img.height);
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    for (std::size_t i = 0; i < n; ++i) {
        double v = 0.299 * img.pixels[3 * i] + 0.587 * img.pixels[3 * i + 1] +
                   0.114 * img.pixels[3 * i + 2];
        int q = static_cast<int>(std::floor(v + 0.5));
        out.pixels[i] = static_cast<std::uint8_t>(std::clamp(q, 0, 255));
    }
    return out;
}

} // namespace symdet
