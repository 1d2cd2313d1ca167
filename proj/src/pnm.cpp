#include "symdet/pnm.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace symdet {

namespace {

constexpr long kMaxDim = 1 << 20;

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

/// Whitespace/comment-aware token scanner over the raw byte stream.
struct Scanner {
    const std::vector<std::uint8_t>& bytes;
    std::size_t pos = 0;

    void skip_space_and_comments() {
        while (pos < bytes.size()) {
            if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (is_pnm_space(bytes[pos])) {
                ++pos;
            } else {
                break;
            }
        }
    }

    std::optional<long> next_number() {
        skip_space_and_comments();
        if (pos >= bytes.size() || !std::isdigit(bytes[pos])) return std::nullopt;
        long v = 0;
        while (pos < bytes.size() && std::isdigit(bytes[pos])) {
            v = v * 10 + (bytes[pos] - '0');
            if (v > 100'000'000L) v = 100'000'000L; // saturate; caller range-checks
            ++pos;
        }
        return v;
    }
};

struct Header {
    char format;  // '2', '3', '5', '6'
    int width;
    int height;
    long maxval;
};

Header parse_header(Scanner& sc) {
    if (sc.bytes.size() < 2 || sc.bytes[0] != 'P')
        throw MalformedHeader("not a PNM stream: missing 'P' magic");
    char f = static_cast<char>(sc.bytes[1]);
    if (f != '2' && f != '3' && f != '5' && f != '6')
        throw MalformedHeader(std::string("unsupported PNM magic 'P") + f + "'");
    sc.pos = 2;
    auto w = sc.next_number();
    auto h = sc.next_number();
    auto mv = sc.next_number();
    if (!w || !h || !mv) throw MalformedHeader("incomplete PNM header");
    if (*w <= 0 || *h <= 0 || *w > kMaxDim || *h > kMaxDim || *w * *h > (64L << 20))
        throw MalformedHeader("bad PNM dimensions");
    if (*mv < 1 || *mv > 65535) throw MalformedHeader("maxval must be in [1, 65535]");
    return {f, static_cast<int>(*w), static_cast<int>(*h), *mv};
}

std::uint8_t rescale(long v, long maxval) {
    if (maxval == 255) return static_cast<std::uint8_t>(v);
    double scaled = static_cast<double>(v) * 255.0 / static_cast<double>(maxval);
    return static_cast<std::uint8_t>(std::floor(scaled + 0.5));
}

/// Reads count samples, ASCII or binary according to the header.
std::vector<std::uint8_t> read_samples(Scanner& sc, const Header& hd, std::size_t count,
                                       bool binary) {
    std::vector<std::uint8_t> out(count);
    if (!binary) {
        for (std::size_t i = 0; i < count; ++i) {
            auto v = sc.next_number();
            if (!v) throw TruncatedData("expected " + std::to_string(count) +
                                        " samples, stream ended at " + std::to_string(i));
            if (*v > hd.maxval)
                throw ValueOutOfRange("sample " + std::to_string(*v) + " exceeds maxval " +
                                      std::to_string(hd.maxval));
            out[i] = rescale(*v, hd.maxval);
        }
        return out;
    }
    // exactly one whitespace byte separates the maxval from the payload
    if (sc.pos >= sc.bytes.size() || !is_pnm_space(sc.bytes[sc.pos]))
        throw MalformedHeader("missing whitespace before binary payload");
    ++sc.pos;
    const int bytes_per_sample = hd.maxval > 255 ? 2 : 1;
    if (sc.bytes.size() - sc.pos < count * static_cast<std::size_t>(bytes_per_sample))
        throw TruncatedData("binary payload shorter than width*height samples");
    for (std::size_t i = 0; i < count; ++i) {
        long v;
        if (bytes_per_sample == 2) {
            v = (static_cast<long>(sc.bytes[sc.pos]) << 8) | sc.bytes[sc.pos + 1];
            sc.pos += 2;
        } else {
            v = sc.bytes[sc.pos++];
        }
        if (v > hd.maxval)
            throw ValueOutOfRange("sample " + std::to_string(v) + " exceeds maxval " +
                                  std::to_string(hd.maxval));
        out[i] = rescale(v, hd.maxval);
    }
    return out;
}

} // namespace

GrayImage read_pgm(const std::vector<std::uint8_t>& bytes) {
    Scanner sc{bytes};
    Header hd = parse_header(sc);
    if (hd.format != '2' && hd.format != '5')
        throw MalformedHeader("expected PGM (P2/P5), got P" + std::string(1, hd.format));
    auto samples = read_samples(sc, hd, static_cast<std::size_t>(hd.width) * hd.height,
                                hd.format == '5');
    return GrayImage(hd.width, hd.height, std::move(samples));
}

RgbImage read_ppm(const std::vector<std::uint8_t>& bytes) {
    Scanner sc{bytes};
    Header hd = parse_header(sc);
    if (hd.format != '3' && hd.format != '6')
        throw MalformedHeader("expected PPM (P3/P6), got P" + std::string(1, hd.format));
    auto samples = read_samples(sc, hd, static_cast<std::size_t>(hd.width) * hd.height * 3,
                                hd.format == '6');
    RgbImage img(hd.width, hd.height);
    img.pixels = std::move(samples);
    return img;
}

std::variant<GrayImage, RgbImage> read_pnm(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '3' || bytes[1] == '6'))
        return read_ppm(bytes);
    return read_pgm(bytes);
}

GrayImage read_image_gray(const std::vector<std::uint8_t>& bytes) {
    auto parsed = read_pnm(bytes);
    if (std::holds_alternative<GrayImage>(parsed)) return std::get<GrayImage>(std::move(parsed));
    return to_grayscale(std::get<RgbImage>(parsed));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img, bool binary) {
    std::ostringstream header;
    header << (binary ? "P5" : "P2") << "\n" << img.width << " " << img.height << "\n255\n";
    std::string hs = header.str();
    std::vector<std::uint8_t> out(hs.begin(), hs.end());
    if (binary) {
        out.insert(out.end(), img.pixels.begin(), img.pixels.end());
        return out;
    }
    std::ostringstream body;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            if (x) body << ' ';
            body << static_cast<int>(img.at(x, y));
        }
        body << '\n';
    }
    std::string bs = body.str();
    out.insert(out.end(), bs.begin(), bs.end());
    return out;
}

std::vector<std::uint8_t> write_ppm_overlay(const GrayImage& img, const BinaryMask& mask,
                                            const BinaryMask* axis_trace) {
    if (mask.width != img.width || mask.height != img.height)
        throw DimensionMismatch("overlay mask dimensions differ from image");
    if (axis_trace && (axis_trace->width != img.width || axis_trace->height != img.height))
        throw DimensionMismatch("axis trace dimensions differ from image");
    std::ostringstream header;
    header << "P6\n" << img.width << " " << img.height << "\n255\n";
    std::string hs = header.str();
    std::vector<std::uint8_t> out(hs.begin(), hs.end());
    out.reserve(hs.size() + img.size() * 3);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            if (axis_trace && axis_trace->get(x, y)) {
                out.push_back(0);
                out.push_back(255);
                out.push_back(0);
            } else if (mask.get(x, y)) {
                out.push_back(255);
                out.push_back(0);
                out.push_back(0);
            } else {
                std::uint8_t v = img.at(x, y);
                out.push_back(v);
                out.push_back(v);
                out.push_back(v);
            }
        }
    return out;
}

GrayImage load_image_gray(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::Io, "cannot open '" + path + "' for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    return read_image_gray(bytes);
}

void save_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw Error(ErrorKind::Io, "short write to '" + path + "'");
}

} // namespace symdet
