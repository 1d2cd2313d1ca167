#pragma once

#include "symdet/image.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace symdet {

/// Netpbm parsers and writers. Supported formats: PGM P2/P5 in and out,
/// PPM P3/P6 in, PPM P6 out (overlay rendering). Headers follow the usual
/// grammar: magic, width, height, maxval, with '#' comments allowed between
/// tokens and a single whitespace byte separating the maxval from a binary
/// payload. Samples with maxval != 255 are rescaled to [0, 255] linearly
/// with round-half-up; maxval > 255 implies two-byte big-endian samples in
/// the binary forms.
///
/// Error taxonomy:
///   MalformedHeader — bad magic, unparsable or non-positive dimensions/maxval
///   TruncatedData   — fewer samples than width*height (or garbage where a
///                     sample was expected)
///   ValueOutOfRange — a sample exceeds the declared maxval

GrayImage read_pgm(const std::vector<std::uint8_t>& bytes);
RgbImage read_ppm(const std::vector<std::uint8_t>& bytes);

/// Parses any of P2/P5 (grayscale) or P3/P6 (color).
std::variant<GrayImage, RgbImage> read_pnm(const std::vector<std::uint8_t>& bytes);

/// Reads a PNM image and converts color inputs to grayscale.
GrayImage read_image_gray(const std::vector<std::uint8_t>& bytes);

/// Emits maxval-255 PGM. Binary form is "P5", ASCII form "P2" with one image
/// row per text line. read_pgm(write_pgm(img, e)) == img for either encoding.
std::vector<std::uint8_t> write_pgm(const GrayImage& img, bool binary);

/// Renders a P6 overlay: unmarked pixels become gray triples (v,v,v), mask
/// pixels pure red, axis-trace pixels pure green. The trace wins where both
/// are set. Pass nullptr to omit the trace.
std::vector<std::uint8_t> write_ppm_overlay(const GrayImage& img, const BinaryMask& mask,
                                            const BinaryMask* axis_trace);

// File-level conveniences used by the CLI and tests. Read failures and
// unwritable paths raise Error with ErrorKind::Io.
GrayImage load_image_gray(const std::string& path);
void save_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes);

} // namespace symdet
