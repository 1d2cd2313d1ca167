#include "symdet/detect.hpp"
#include "symdet/phantom.hpp"
#include "symdet/pnm.hpp"
#include "symdet/report_json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using namespace symdet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitBadParam = 2;
constexpr int kExitDegenerate = 3;

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::Io: return kExitIo;
    case ErrorKind::BadParam: return kExitBadParam;
    case ErrorKind::Degenerate: return kExitDegenerate;
    }
    return kExitBadParam;
}

struct EdgeOptions {
    std::string operator_name = "canny";
    double threshold = kDefaultEdgeThreshold;
    CannyParams canny_params{};

    void attach(CLI::App* cmd) {
        cmd->add_option("--operator", operator_name, "Edge operator")
            ->check(CLI::IsMember({"roberts", "prewitt", "canny"}))
            ->capture_default_str();
        cmd->add_option("--threshold", threshold,
                        "Roberts/Prewitt threshold as a fraction of max gradient magnitude")
            ->capture_default_str();
        cmd->add_option("--sigma", canny_params.sigma, "Canny Gaussian sigma in pixels")
            ->capture_default_str();
        cmd->add_option("--low", canny_params.low_ratio, "Canny weak-edge ratio")
            ->capture_default_str();
        cmd->add_option("--high", canny_params.high_ratio, "Canny strong-edge ratio")
            ->capture_default_str();
    }

    EdgeOperator op() const {
        if (operator_name == "roberts") return EdgeOperator::Roberts;
        if (operator_name == "prewitt") return EdgeOperator::Prewitt;
        return EdgeOperator::Canny;
    }

    EdgeMap run(const GrayImage& img) const {
        switch (op()) {
        case EdgeOperator::Roberts: return roberts(img, threshold);
        case EdgeOperator::Prewitt: return prewitt(img, threshold);
        case EdgeOperator::Canny: return canny(img, canny_params);
        }
        throw InvalidParams("unknown operator");
    }
};

std::vector<std::uint8_t> edge_map_pgm(const EdgeMap& em) {
    GrayImage img(em.width, em.height, 0);
    for (std::size_t i = 0; i < em.bits.size(); ++i) img.pixels[i] = em.bits[i] ? 255 : 0;
    return write_pgm(img, true);
}

// ---------------------------------------------------------------------------
// edges

struct EdgesCmd {
    std::string input;
    EdgeOptions edge;
    std::string out_path;
    bool json = false;

    int run() const {
        GrayImage img = load_image_gray(input);
        EdgeMap em = edge.run(img);
        long n = count_edges(em);
        if (!out_path.empty()) save_bytes(out_path, edge_map_pgm(em));
        if (json) {
            nlohmann::json j{{"operator", edge.operator_name}, {"count", n}};
            std::cout << dump_json(j);
        } else {
            std::cout << edge.operator_name << " " << n << "\n";
        }
        return kExitOk;
    }
};

// ---------------------------------------------------------------------------
// axis

struct AxisCmd {
    std::string input;
    EdgeOptions edge;
    int degree = kDefaultCurveDegree;
    double tau_rms = kDefaultTauRms;
    double tau_improve = kDefaultTauImprove;

    int run() const {
        GrayImage img = load_image_gray(input);
        EdgeMap em = edge.run(img);
        CentroidSeries cs = edge_centroids(em);
        auto [verdict, axis] = classify_and_fit(cs, degree, tau_rms, tau_improve);
        std::cout << dump_json(axis_to_json(verdict, axis));
        return kExitOk;
    }
};

// ---------------------------------------------------------------------------
// detect

struct DetectCmd {
    std::string input;
    EdgeOptions edge;
    PipelineConfig config;
    std::string report_path;
    std::string overlay_path;
    std::string edges_path;
    std::string asymmetry_path;

    int run() {
        GrayImage img = load_image_gray(input);
        config.op = edge.op();
        config.edge_threshold = edge.threshold;
        config.canny_params = edge.canny_params;
        PipelineResult res = run_pipeline(img, config);

        std::string report = dump_json(report_to_json(res, config));
        std::vector<std::uint8_t> overlay = write_ppm_overlay(
            img, regions_mask(res.report, img.width, img.height), &res.axis_trace);

        if (!report_path.empty())
            save_bytes(report_path, std::vector<std::uint8_t>(report.begin(), report.end()));
        if (!overlay_path.empty()) save_bytes(overlay_path, overlay);
        if (!edges_path.empty()) save_bytes(edges_path, edge_map_pgm(res.edges));
        if (!asymmetry_path.empty()) save_bytes(asymmetry_path, write_pgm(res.asymmetry, true));
        std::cout << report;
        return kExitOk;
    }
};

// ---------------------------------------------------------------------------
// bench

struct BenchCmd {
    std::string input_dir;
    EdgeOptions edge;
    int jobs = 0;
    std::string out_path;

    struct Row {
        std::string name;
        long counts[3] = {0, 0, 0};
        std::string error;
    };

    int run() const {
        if (!fs::is_directory(input_dir))
            throw Error(ErrorKind::Io, "'" + input_dir + "' is not a directory");
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(input_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".pgm")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
            return a.filename().string() < b.filename().string();
        });

        std::vector<Row> rows(files.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
                Row& row = rows[i];
                row.name = files[i].filename().string();
                try {
                    GrayImage img = load_image_gray(files[i].string());
                    row.counts[0] = count_edges(roberts(img, edge.threshold));
                    row.counts[1] = count_edges(prewitt(img, edge.threshold));
                    row.counts[2] = count_edges(canny(img, edge.canny_params));
                } catch (const Error& e) {
                    row.error = e.what();
                }
            }
        };

        unsigned n_threads = jobs > 0 ? static_cast<unsigned>(jobs)
                                      : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
        n_threads = std::min<unsigned>(n_threads, std::max<std::size_t>(files.size(), 1));
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();

        std::ostringstream csv;
        csv << "image,roberts,prewitt,canny\n";
        bool failed = false;
        for (const Row& row : rows) {
            if (!row.error.empty()) {
                std::cerr << "error: " << row.name << ": " << row.error << "\n";
                failed = true;
                continue;
            }
            csv << row.name << "," << row.counts[0] << "," << row.counts[1] << ","
                << row.counts[2] << "\n";
        }
        std::cout << csv.str();
        if (failed) return kExitIo; // partial results on stdout, no file outputs
        if (!out_path.empty()) {
            std::string s = csv.str();
            save_bytes(out_path, std::vector<std::uint8_t>(s.begin(), s.end()));
        }
        return kExitOk;
    }
};

// ---------------------------------------------------------------------------
// phantom

struct PhantomCmd {
    PhantomSpec spec;
    double lesion_x = -1.0, lesion_y = -1.0, lesion_radius = 0.0;
    int lesion_delta = 0;
    std::string out_path = "phantom.pgm";
    std::string corpus_dir;

    int run() {
        if (!corpus_dir.empty()) {
            fs::create_directories(corpus_dir);
            for (const auto& entry : standard_corpus()) {
                GrayImage img = render_phantom(entry.spec);
                save_bytes((fs::path(corpus_dir) / entry.name).string(), write_pgm(img, true));
            }
            std::cout << "wrote 6 phantoms to " << corpus_dir << "\n";
            return kExitOk;
        }
        if (lesion_radius > 0.0) {
            spec.has_lesion = true;
            spec.lesion_x = lesion_x;
            spec.lesion_y = lesion_y;
            spec.lesion_radius = lesion_radius;
            spec.lesion_delta = lesion_delta;
        }
        GrayImage img = render_phantom(spec);
        save_bytes(out_path, write_pgm(img, true));
        return kExitOk;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bilateral-symmetry anomaly detection for grayscale brain slices"};
    app.require_subcommand(1);

    EdgesCmd edges_cmd;
    auto* edges = app.add_subcommand("edges", "Compute an edge map and report the edge count");
    edges->add_option("input", edges_cmd.input, "PGM/PPM input image")->required();
    edges_cmd.edge.attach(edges);
    edges->add_option("--out", edges_cmd.out_path, "Write the edge map as PGM");
    edges->add_flag("--json", edges_cmd.json, "Emit the count as JSON");

    AxisCmd axis_cmd;
    auto* axis = app.add_subcommand("axis", "Fit the symmetry axis and classify it");
    axis->add_option("input", axis_cmd.input, "PGM/PPM input image")->required();
    axis_cmd.edge.attach(axis);
    axis->add_option("--degree", axis_cmd.degree, "Curve fit degree")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    axis->add_option("--tau-rms", axis_cmd.tau_rms, "Straight-fit rms tolerance in pixels")
        ->capture_default_str();
    axis->add_option("--tau-improve", axis_cmd.tau_improve,
                     "Relative rms improvement that flags distortion")
        ->capture_default_str();

    DetectCmd detect_cmd;
    auto* detect = app.add_subcommand("detect", "Run the full detection pipeline");
    detect->add_option("input", detect_cmd.input, "PGM/PPM input image")->required();
    detect_cmd.edge.attach(detect);
    detect->add_option("--degree", detect_cmd.config.curve_degree, "Curve fit degree")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    detect->add_option("--tau-rms", detect_cmd.config.tau_rms,
                       "Straight-fit rms tolerance in pixels")
        ->capture_default_str();
    detect->add_option("--tau-improve", detect_cmd.config.tau_improve,
                       "Relative rms improvement that flags distortion")
        ->capture_default_str();
    detect->add_option("--diff-threshold", detect_cmd.config.diff_threshold,
                       "Asymmetry intensity threshold")
        ->capture_default_str();
    detect->add_option("--min-area", detect_cmd.config.min_area,
                       "Minimum region area in pixels")
        ->capture_default_str();
    detect->add_option("--report", detect_cmd.report_path, "Write the JSON report here");
    detect->add_option("--overlay", detect_cmd.overlay_path,
                       "Write a PPM overlay (regions red, axis green)");
    detect->add_option("--edges", detect_cmd.edges_path, "Write the edge map as PGM");
    detect->add_option("--asymmetry", detect_cmd.asymmetry_path,
                       "Write the asymmetry map as PGM");

    BenchCmd bench_cmd;
    auto* bench = app.add_subcommand(
        "bench", "Edge counts per operator for every .pgm in a directory, as CSV");
    bench->add_option("input", bench_cmd.input_dir, "Directory of PGM images")->required();
    bench_cmd.edge.attach(bench);
    bench->add_option("--jobs", bench_cmd.jobs, "Worker threads (0 = auto)")
        ->capture_default_str();
    bench->add_option("--out", bench_cmd.out_path, "Also write the CSV here");

    PhantomCmd phantom_cmd;
    auto* phantom = app.add_subcommand("phantom", "Generate a synthetic test image");
    phantom->add_option("--out", phantom_cmd.out_path, "Output PGM path")
        ->capture_default_str();
    phantom->add_option("--width", phantom_cmd.spec.width)->capture_default_str();
    phantom->add_option("--height", phantom_cmd.spec.height)->capture_default_str();
    phantom->add_option("--center-x", phantom_cmd.spec.center_x)->capture_default_str();
    phantom->add_option("--center-y", phantom_cmd.spec.center_y)->capture_default_str();
    phantom->add_option("--semi-x", phantom_cmd.spec.semi_x)->capture_default_str();
    phantom->add_option("--semi-y", phantom_cmd.spec.semi_y)->capture_default_str();
    phantom->add_option("--intensity", phantom_cmd.spec.intensity)->capture_default_str();
    phantom->add_option("--lesion-x", phantom_cmd.lesion_x, "Lesion center x");
    phantom->add_option("--lesion-y", phantom_cmd.lesion_y, "Lesion center y");
    phantom->add_option("--lesion-radius", phantom_cmd.lesion_radius,
                        "Lesion radius (> 0 enables the lesion)");
    phantom->add_option("--lesion-delta", phantom_cmd.lesion_delta,
                        "Lesion intensity shift, may be negative");
    phantom->add_option("--tilt", phantom_cmd.spec.tilt, "Midline tilt, px per row");
    phantom->add_option("--bow", phantom_cmd.spec.bow, "Midline bow in px");
    phantom->add_option("--seed", phantom_cmd.spec.seed)->capture_default_str();
    phantom->add_option("--noise", phantom_cmd.spec.noise_amplitude, "Uniform noise amplitude")
        ->capture_default_str();
    phantom->add_option("--corpus", phantom_cmd.corpus_dir,
                        "Write the standard six-image corpus to this directory instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParam;
    }

    try {
        if (edges->parsed()) return edges_cmd.run();
        if (axis->parsed()) return axis_cmd.run();
        if (detect->parsed()) return detect_cmd.run();
        if (bench->parsed()) return bench_cmd.run();
        if (phantom->parsed()) return phantom_cmd.run();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitBadParam;
}
