#include "symdet/image.hpp"
#include "symdet/pnm.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace symdet;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

std::string string_of(const std::vector<std::uint8_t>& b) {
    return std::string(b.begin(), b.end());
}

GrayImage random_image(std::mt19937& rng, int max_dim = 32) {
    int w = 1 + static_cast<int>(rng() % max_dim);
    int h = 1 + static_cast<int>(rng() % max_dim);
    GrayImage img(w, h);
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng() % 256);
    return img;
}

} // namespace

TEST_CASE("to_grayscale: primary values") {
    RgbImage img(2, 2);
    img.set(0, 0, 0, 0, 0);
    img.set(1, 0, 255, 255, 255);
    img.set(0, 1, 255, 0, 0);       // round(0.299 * 255) = 76
    img.set(1, 1, 0, 255, 0);       // round(0.587 * 255) = 150
    GrayImage g = to_grayscale(img);
    CHECK(g.width == 2);
    CHECK(g.height == 2);
    CHECK(g.at(0, 0) == 0);
    CHECK(g.at(1, 0) == 255);
    CHECK(g.at(0, 1) == 76);
    CHECK(g.at(1, 1) == 150);
}

TEST_CASE("to_grayscale: gray triples are fixed points") {
    for (int v = 0; v <= 255; ++v) {
        RgbImage img(1, 1);
        img.set(0, 0, static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v),
                static_cast<std::uint8_t>(v));
        CHECK(to_grayscale(img).at(0, 0) == v);
    }
}

TEST_CASE("read_pgm: ASCII literal") {
    GrayImage g = read_pgm(bytes_of("P2\n2 2\n255\n0 255 255 0\n"));
    CHECK(g.width == 2);
    CHECK(g.height == 2);
    CHECK(g.pixels == std::vector<std::uint8_t>{0, 255, 255, 0});
}

TEST_CASE("read_pgm: binary single sample") {
    auto b = bytes_of("P5\n1 1\n255\n");
    b.push_back(0x7F);
    GrayImage g = read_pgm(b);
    CHECK(g.width == 1);
    CHECK(g.pixels == std::vector<std::uint8_t>{127});
}

TEST_CASE("read_pgm: maxval rescaling rounds half up") {
    // round(50 * 255 / 100) = round(127.5) = 128
    CHECK(read_pgm(bytes_of("P2\n1 1\n100\n50\n")).pixels[0] == 128);
    CHECK(read_pgm(bytes_of("P2\n1 1\n100\n100\n")).pixels[0] == 255);
    CHECK(read_pgm(bytes_of("P2\n1 1\n100\n0\n")).pixels[0] == 0);
}

TEST_CASE("read_pgm: comments and whitespace in header") {
    GrayImage g = read_pgm(bytes_of("P2 # magic\n# a comment line\n 2\t1 # dims\n255\n7 9\n"));
    CHECK(g.width == 2);
    CHECK(g.height == 1);
    CHECK(g.pixels == std::vector<std::uint8_t>{7, 9});
}

TEST_CASE("read_pgm: 16-bit binary samples are big-endian and rescaled") {
    auto b = bytes_of("P5\n1 1\n65535\n");
    b.push_back(0xFF);
    b.push_back(0xFF);
    CHECK(read_pgm(b).pixels[0] == 255);
    auto half = bytes_of("P5\n1 1\n65535\n");
    half.push_back(0x80); // 32768/65535*255 = 127.50... -> 128
    half.push_back(0x00);
    CHECK(read_pgm(half).pixels[0] == 128);
}

TEST_CASE("read_pgm: typed failures") {
    CHECK_THROWS_AS(read_pgm(bytes_of("")), MalformedHeader);
    CHECK_THROWS_AS(read_pgm(bytes_of("P7\n1 1\n255\n0\n")), MalformedHeader);
    CHECK_THROWS_AS(read_pgm(bytes_of("P2\n0 2\n255\n")), MalformedHeader);
    CHECK_THROWS_AS(read_pgm(bytes_of("P2\n2 -1\n255\n0 0\n")), MalformedHeader);
    CHECK_THROWS_AS(read_pgm(bytes_of("P2\nx 2\n255\n0 0\n")), MalformedHeader);
    CHECK_THROWS_AS(read_pgm(bytes_of("P2\n1 1\n0\n0\n")), MalformedHeader);
    CHECK_THROWS_AS(read_pgm(bytes_of("P2\n1 1\n70000\n0\n")), MalformedHeader);
    CHECK_THROWS_AS(read_pgm(bytes_of("P2\n2 2\n255\n0 1 2\n")), TruncatedData);
    CHECK_THROWS_AS(read_pgm(bytes_of("P2\n1 1\n255\nabc\n")), TruncatedData);
    CHECK_THROWS_AS(read_pgm(bytes_of("P5\n2 2\n255\n\x01\x02")), TruncatedData);
    CHECK_THROWS_AS(read_pgm(bytes_of("P2\n1 1\n100\n101\n")), ValueOutOfRange);
    auto over = bytes_of("P5\n1 1\n100\n");
    over.push_back(0xC8); // 200 > maxval 100
    CHECK_THROWS_AS(read_pgm(over), ValueOutOfRange);
}

TEST_CASE("read_pgm: never crashes on arbitrary bytes") {
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<std::uint8_t> junk(rng() % 64);
        for (auto& b : junk) b = static_cast<std::uint8_t>(rng() % 256);
        if (iter % 3 == 0 && junk.size() >= 2) {
            junk[0] = 'P';
            junk[1] = static_cast<std::uint8_t>('2' + rng() % 4);
        }
        try {
            (void)read_pnm(junk);
        } catch (const Error&) {
            // typed failure is the contract
        }
    }
    CHECK(true);
}

TEST_CASE("write_pgm: minimal ASCII image") {
    GrayImage g(1, 1, std::vector<std::uint8_t>{0});
    CHECK(string_of(write_pgm(g, false)) == "P2\n1 1\n255\n0\n");
}

TEST_CASE("write_pgm: binary byte layout") {
    GrayImage g(2, 1, std::vector<std::uint8_t>{5, 250});
    auto b = write_pgm(g, true);
    std::string header = "P5\n2 1\n255\n";
    REQUIRE(b.size() == header.size() + 2);
    CHECK(string_of({b.begin(), b.begin() + static_cast<long>(header.size())}) == header);
    CHECK(b[header.size()] == 0x05);
    CHECK(b[header.size() + 1] == 0xFA);
}

TEST_CASE("pgm round-trip is exact in both encodings") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        GrayImage img = random_image(rng);
        CHECK(read_pgm(write_pgm(img, false)) == img);
        CHECK(read_pgm(write_pgm(img, true)) == img);
    }
}

TEST_CASE("read_ppm: P3 and P6") {
    RgbImage c = read_ppm(bytes_of("P3\n1 2\n255\n1 2 3\n4 5 6\n"));
    CHECK(c.width == 1);
    CHECK(c.height == 2);
    CHECK(c.pixels == std::vector<std::uint8_t>{1, 2, 3, 4, 5, 6});
    auto b = bytes_of("P6\n2 1\n255\n");
    for (std::uint8_t v : {10, 20, 30, 40, 50, 60}) b.push_back(v);
    RgbImage c2 = read_ppm(b);
    CHECK(c2.pixels == std::vector<std::uint8_t>{10, 20, 30, 40, 50, 60});
}

TEST_CASE("read_image_gray converts color input") {
    GrayImage g = read_image_gray(bytes_of("P3\n1 1\n255\n255 0 0\n"));
    CHECK(g.pixels[0] == 76);
}

TEST_CASE("write_ppm_overlay: rendering rules") {
    GrayImage img(2, 1, std::vector<std::uint8_t>{10, 20});
    BinaryMask mask(2, 1);
    std::string header = "P6\n2 1\n255\n";

    SUBCASE("empty mask renders gray triples") {
        auto b = write_ppm_overlay(img, mask, nullptr);
        REQUIRE(b.size() == header.size() + 6);
        const std::uint8_t* px = b.data() + header.size();
        CHECK(px[0] == 10);
        CHECK(px[1] == 10);
        CHECK(px[2] == 10);
        CHECK(px[3] == 20);
        CHECK(px[4] == 20);
        CHECK(px[5] == 20);
    }
    SUBCASE("mask pixel renders pure red") {
        mask.set(0, 0, true);
        auto b = write_ppm_overlay(img, mask, nullptr);
        const std::uint8_t* px = b.data() + header.size();
        CHECK(px[0] == 255);
        CHECK(px[1] == 0);
        CHECK(px[2] == 0);
        CHECK(px[3] == 20);
    }
    SUBCASE("full mask overrides everything") {
        mask.set(0, 0, true);
        mask.set(1, 0, true);
        auto b = write_ppm_overlay(img, mask, nullptr);
        const std::uint8_t* px = b.data() + header.size();
        for (int i = 0; i < 2; ++i) {
            CHECK(px[3 * i] == 255);
            CHECK(px[3 * i + 1] == 0);
            CHECK(px[3 * i + 2] == 0);
        }
    }
    SUBCASE("axis trace wins over mask") {
        mask.set(0, 0, true);
        BinaryMask trace(2, 1);
        trace.set(0, 0, true);
        auto b = write_ppm_overlay(img, mask, &trace);
        const std::uint8_t* px = b.data() + header.size();
        CHECK(px[0] == 0);
        CHECK(px[1] == 255);
        CHECK(px[2] == 0);
    }
    SUBCASE("dimension mismatch is rejected") {
        BinaryMask bad(3, 1);
        CHECK_THROWS_AS(write_ppm_overlay(img, bad, nullptr), DimensionMismatch);
        BinaryMask trace(3, 1);
        CHECK_THROWS_AS(write_ppm_overlay(img, mask, &trace), DimensionMismatch);
    }
}

TEST_CASE("image constructors validate") {
    CHECK_THROWS_AS(GrayImage(0, 3), InvalidParams);
    CHECK_THROWS_AS(GrayImage(2, 2, std::vector<std::uint8_t>{1, 2, 3}), DimensionMismatch);
}
