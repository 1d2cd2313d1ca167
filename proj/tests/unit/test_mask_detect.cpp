#include "symdet/detect.hpp"
#include "symdet/phantom.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace symdet;

namespace {

std::vector<std::vector<Pixel>> canonical(std::vector<std::vector<Pixel>> comps) {
    auto key = [](const Pixel& p) { return std::pair<int, int>(p.y, p.x); };
    for (auto& c : comps)
        std::sort(c.begin(), c.end(), [&](auto a, auto b) { return key(a) < key(b); });
    std::sort(comps.begin(), comps.end(),
              [&](const auto& a, const auto& b) { return key(a.front()) < key(b.front()); });
    return comps;
}

SymmetryAxis straight_axis(double k) {
    SymmetryAxis a;
    a.kind = AxisKind::Straight;
    a.straight_k = k;
    return a;
}

} // namespace

TEST_CASE("label_components matches flood-fill oracle") {
    std::mt19937 rng(60646);
    for (int conn : {4, 8}) {
        for (int iter = 0; iter < 30; ++iter) {
            int w = 2 + static_cast<int>(rng() % 63);
            int h = 2 + static_cast<int>(rng() % 63);
            BinaryMask m(w, h);
            for (auto& b : m.bits) b = (rng() % 3 == 0) ? 1 : 0;
            CHECK(canonical(label_components(m, conn)) == oracle::components(m, conn));
        }
    }
}

TEST_CASE("morphology: opening removes speckle, keeps fat blobs") {
    BinaryMask m(12, 12);
    for (int y = 3; y <= 8; ++y)
        for (int x = 3; x <= 8; ++x) m.set(x, y, true);
    m.set(10, 1, true); // isolated pixel
    BinaryMask opened = open3(m);
    CHECK_FALSE(opened.get(10, 1));
    long kept = 0;
    for (int y = 3; y <= 8; ++y)
        for (int x = 3; x <= 8; ++x)
            if (opened.get(x, y)) ++kept;
    CHECK(kept == 36); // the 6x6 block survives intact
    CHECK(opened.count() == 36);
}

TEST_CASE("morphology: erosion strips the border ring") {
    BinaryMask m(5, 5, true);
    BinaryMask e = erode3(m);
    CHECK(e.count() == 9);
    for (int y = 1; y <= 3; ++y)
        for (int x = 1; x <= 3; ++x) CHECK(e.get(x, y));
}

TEST_CASE("fill_holes closes interior background") {
    BinaryMask m(10, 10);
    for (int y = 2; y <= 7; ++y)
        for (int x = 2; x <= 7; ++x) m.set(x, y, true);
    m.set(4, 4, false);
    m.set(5, 4, false);
    BinaryMask filled = fill_holes(m);
    CHECK(filled.get(4, 4));
    CHECK(filled.get(5, 4));
    CHECK(filled.count() == 36);
    CHECK_FALSE(filled.get(0, 0)); // border-touching background stays
}

TEST_CASE("brain_mask: block, hole fill, largest component") {
    SUBCASE("single block") {
        GrayImage img(20, 20, 0);
        for (int y = 5; y < 15; ++y)
            for (int x = 5; x < 15; ++x) img.set(x, y, 200);
        BrainMask bm = brain_mask(img);
        CHECK(bm.area == 100);
        for (int y = 5; y < 15; ++y)
            for (int x = 5; x < 15; ++x) CHECK(bm.mask.get(x, y));
    }
    SUBCASE("interior hole is filled") {
        GrayImage img(20, 20, 0);
        for (int y = 5; y < 15; ++y)
            for (int x = 5; x < 15; ++x) img.set(x, y, 200);
        img.set(9, 9, 0);
        img.set(10, 9, 0);
        img.set(9, 10, 0);
        img.set(10, 10, 0);
        BrainMask bm = brain_mask(img);
        CHECK(bm.area == 100);
    }
    SUBCASE("largest of two blobs wins") {
        GrayImage img(30, 20, 0);
        for (int y = 2; y < 12; ++y)
            for (int x = 2; x < 12; ++x) img.set(x, y, 220); // 100 px
        for (int y = 3; y < 9; ++y)
            for (int x = 20; x < 25; ++x) img.set(x, y, 220); // 30 px
        BrainMask bm = brain_mask(img);
        CHECK(bm.area == 100);
        CHECK_FALSE(bm.mask.get(21, 4));
    }
    SUBCASE("all-zero image has no foreground") {
        CHECK_THROWS_AS(brain_mask(GrayImage(8, 8, 0)), EmptyForeground);
    }
}

TEST_CASE("reflect_about_axis: fixed point and mirror arithmetic") {
    SUBCASE("mirror-symmetric image is a fixed point") {
        GrayImage img(9, 3, 0);
        for (int y = 0; y < 3; ++y)
            for (int x = 0; x < 9; ++x)
                img.set(x, y, static_cast<std::uint8_t>(10 * std::abs(x - 4) + y));
        GrayImage r = reflect_about_axis(img, straight_axis(4.0));
        CHECK(r == img);
    }
    SUBCASE("lit pixel lands mirrored") {
        GrayImage img(16, 4, 0);
        img.set(5, 2, 99); // k=8: 5 = k-3, mirror is k+3 = 11
        GrayImage r = reflect_about_axis(img, straight_axis(8.0));
        CHECK(r.at(11, 2) == 99);
        CHECK(r.at(5, 2) == 0);
    }
    SUBCASE("double reflection about integer axes is identity in bounds") {
        std::mt19937 rng(8855);
        for (int iter = 0; iter < 25; ++iter) {
            GrayImage img(16, 16);
            for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng() % 256);
            int k = 2 + static_cast<int>(rng() % 12);
            SymmetryAxis ax = straight_axis(static_cast<double>(k));
            GrayImage twice = reflect_about_axis(reflect_about_axis(img, ax), ax);
            for (int y = 0; y < 16; ++y)
                for (int x = 0; x < 16; ++x) {
                    int m = 2 * k - x;
                    if (m >= 0 && m < 16) CHECK(twice.at(x, y) == img.at(x, y));
                }
        }
    }
}

TEST_CASE("asymmetry_map: zero on symmetric input, two-sided response") {
    GrayImage img(17, 9, 0);
    for (int y = 2; y < 7; ++y)
        for (int x = 3; x < 14; ++x) img.set(x, y, 120);
    BrainMask bm = brain_mask(img);
    SymmetryAxis ax = straight_axis(8.0);

    GrayImage zero = asymmetry_map(img, ax, bm);
    for (auto v : zero.pixels) CHECK(v == 0);

    GrayImage bumped = img;
    bumped.set(5, 4, 160); // +40 off axis
    GrayImage amap = asymmetry_map(bumped, ax, brain_mask(bumped));
    CHECK(amap.at(5, 4) == 40);
    CHECK(amap.at(11, 4) == 40); // mirror of 5 about 8
    long nonzero = 0;
    for (auto v : amap.pixels)
        if (v != 0) ++nonzero;
    CHECK(nonzero == 2);

    BrainMask wrong;
    wrong.mask = BinaryMask(5, 5);
    CHECK_THROWS_AS(asymmetry_map(img, ax, wrong), DimensionMismatch);
}

TEST_CASE("detect_regions: empty map, ratio identity, pair resolution") {
    // 40x21 brain block, axis at x=20, hot square on the left side.
    GrayImage img(41, 21, 0);
    for (int y = 3; y < 18; ++y)
        for (int x = 4; x < 37; ++x) img.set(x, y, 100);
    for (int y = 8; y < 13; ++y)
        for (int x = 8; x < 13; ++x) img.set(x, y, 200); // 25 px lesion
    BrainMask bm = brain_mask(img);
    SymmetryAxis ax = straight_axis(20.0);
    GrayImage amap = asymmetry_map(img, ax, bm);

    SUBCASE("zero asymmetry yields an empty report at any threshold") {
        GrayImage flat(41, 21, 0);
        for (int y = 3; y < 18; ++y)
            for (int x = 4; x < 37; ++x) flat.set(x, y, 100);
        BrainMask fb = brain_mask(flat);
        GrayImage za = asymmetry_map(flat, ax, fb);
        for (int t : {1, 30, 255}) {
            RegionReport r = detect_regions(za, flat, ax, fb, t, 5);
            CHECK(r.regions.empty());
            CHECK(r.total_tumor_area == 0);
            CHECK(r.damage_percent == 0.0);
            CHECK(r.brain_area == fb.area);
        }
    }
    SUBCASE("lesion side is kept and percentages are consistent") {
        RegionReport r = detect_regions(amap, img, ax, bm, 30, 5);
        REQUIRE(r.regions.size() == 1);
        const Region& reg = r.regions[0];
        CHECK(reg.side == Side::Left);
        CHECK(reg.area == 25);
        CHECK(reg.centroid_x == doctest::Approx(10.0));
        CHECK(reg.centroid_y == doctest::Approx(10.0));
        CHECK(reg.mean_intensity == doctest::Approx(200.0));
        CHECK(r.total_tumor_area == 25);
        CHECK(r.brain_area == bm.area);
        CHECK(r.damage_percent ==
              doctest::Approx(100.0 * 25.0 / bm.area).epsilon(1e-12));
    }
    SUBCASE("min_area filters small components") {
        RegionReport r = detect_regions(amap, img, ax, bm, 30, 26);
        CHECK(r.regions.empty());
    }
    SUBCASE("raising diff_threshold never grows the area") {
        long prev = detect_regions(amap, img, ax, bm, 10, 5).total_tumor_area;
        for (int t : {30, 60, 90, 120, 200}) {
            long a = detect_regions(amap, img, ax, bm, t, 5).total_tumor_area;
            CHECK(a <= prev);
            prev = a;
        }
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(detect_regions(amap, img, ax, bm, 0, 5), InvalidParams);
        CHECK_THROWS_AS(detect_regions(amap, img, ax, bm, 300, 5), InvalidParams);
        CHECK_THROWS_AS(detect_regions(amap, img, ax, bm, 30, 0), InvalidParams);
    }
}

TEST_CASE("detect_regions: hypo-intense side wins when it deviates more") {
    GrayImage img(41, 21, 0);
    for (int y = 3; y < 18; ++y)
        for (int x = 4; x < 37; ++x) img.set(x, y, 140);
    for (int y = 8; y < 13; ++y)
        for (int x = 26; x < 31; ++x) img.set(x, y, 40); // dark lesion, right side
    BrainMask bm = brain_mask(img);
    SymmetryAxis ax = straight_axis(20.0);
    GrayImage amap = asymmetry_map(img, ax, bm);
    RegionReport r = detect_regions(amap, img, ax, bm, 30, 5);
    REQUIRE(r.regions.size() == 1);
    CHECK(r.regions[0].side == Side::Right);
    CHECK(r.regions[0].mean_intensity == doctest::Approx(40.0));
}

TEST_CASE("mirror-pair property of the binarized asymmetry set") {
    PhantomSpec spec = lesion_spec();
    GrayImage img = render_phantom(spec);
    PipelineConfig cfg;
    PipelineResult res = run_pipeline(img, cfg);
    REQUIRE(res.verdict.classification == Classification::Distorted);
    BinaryMask bin(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            bin.set(x, y, res.asymmetry.at(x, y) >= cfg.diff_threshold);
    BinaryMask opened = open3(bin);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            if (!opened.get(x, y)) continue;
            double g = evaluate_axis(res.axis, y);
            int mx = static_cast<int>(std::floor(2.0 * g - x + 0.5));
            bool found = false;
            for (int d = -1; d <= 1 && !found; ++d)
                if (opened.in_bounds(mx + d, y) && opened.get(mx + d, y)) found = true;
            CHECK(found);
        }
}

TEST_CASE("run_pipeline: clean symmetric phantom") {
    GrayImage img = render_phantom(clean_symmetric_spec());
    PipelineResult res = run_pipeline(img, PipelineConfig{});
    CHECK(res.verdict.classification == Classification::Symmetric);
    CHECK(res.verdict.straight_rms < 1.0);
    CHECK(res.axis.kind == AxisKind::Straight);
    CHECK(res.report.regions.empty());
    CHECK(res.report.total_tumor_area == 0);
    CHECK(res.report.damage_percent == 0.0);
    CHECK(res.report.brain_area == res.brain.area);
    CHECK(count_edges(res.edges) > 0);
}

TEST_CASE("run_pipeline: lesion phantom recovers the disk") {
    PhantomSpec spec = lesion_spec();
    GrayImage img = render_phantom(spec);
    PipelineResult res = run_pipeline(img, PipelineConfig{});
    REQUIRE(!res.report.regions.empty());
    long disk = lesion_pixel_count(spec);
    CHECK(res.report.total_tumor_area >= static_cast<long>(0.85 * disk));
    CHECK(res.report.total_tumor_area <= static_cast<long>(1.15 * disk));
    const Region& reg = res.report.regions[0];
    CHECK(std::abs(reg.centroid_x - spec.lesion_x) <= 3.0);
    CHECK(std::abs(reg.centroid_y - spec.lesion_y) <= 3.0);
    CHECK(reg.side == Side::Right);
    CHECK(res.report.damage_percent ==
          doctest::Approx(100.0 * res.report.total_tumor_area / res.report.brain_area)
              .epsilon(1e-12));
    CHECK(res.report.damage_percent >= 0.0);
    CHECK(res.report.damage_percent <= 100.0);
    for (const Region& r : res.report.regions)
        for (const Pixel& p : r.pixels) CHECK(res.brain.mask.get(p.x, p.y));
}

TEST_CASE("run_pipeline: determinism") {
    GrayImage img = render_phantom(lesion_spec());
    PipelineConfig cfg;
    PipelineResult a = run_pipeline(img, cfg);
    PipelineResult b = run_pipeline(img, cfg);
    CHECK(a.edges == b.edges);
    CHECK(a.asymmetry == b.asymmetry);
    CHECK(a.report.total_tumor_area == b.report.total_tumor_area);
    CHECK(a.report.damage_percent == b.report.damage_percent);
    CHECK(a.axis.coeffs == b.axis.coeffs);
}

TEST_CASE("run_pipeline: degenerate input names the failing stage") {
    GrayImage blank(32, 32, 0);
    try {
        run_pipeline(blank, PipelineConfig{});
        FAIL("expected PipelineError");
    } catch (const PipelineError& e) {
        CHECK(e.kind() == ErrorKind::Degenerate);
        CHECK(std::string(e.what()).find(e.stage()) == 0);
    }
}

TEST_CASE("regions_mask unions region pixels") {
    RegionReport r;
    Region reg;
    reg.pixels = {{1, 1}, {2, 1}};
    reg.area = 2;
    r.regions.push_back(reg);
    BinaryMask m = regions_mask(r, 4, 3);
    CHECK(m.count() == 2);
    CHECK(m.get(1, 1));
    CHECK(m.get(2, 1));
}
