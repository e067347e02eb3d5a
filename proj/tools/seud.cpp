// seud — deterministic video weather degradation synthesizer and tools.
//
// Subcommands: synthesize, dehaze, evaluate, trace, validate.
// Exit codes: 0 success, 1 usage error, 2 data error.

#include "seud/dataset.hpp"
#include "seud/image_io.hpp"
#include "seud/metrics.hpp"
#include "seud/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace seud;

namespace {

std::string frame_name(int index, FrameFormat fmt) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%06d%s", index, frame_extension(fmt));
    return buf;
}

FrameFormat detect_format(const std::string& path) {
    return path.size() >= 4 && path.compare(path.size() - 4, 4, ".f32") == 0
               ? FrameFormat::RawFloat
               : FrameFormat::Png;
}

std::vector<Frame> load_frames(const std::string& dir) {
    std::vector<Frame> out;
    for (const auto& p : list_frame_files(dir))
        out.push_back(read_frame(p, detect_format(p)));
    if (out.empty())
        throw std::runtime_error("no frames found in " + dir);
    return out;
}

std::vector<DepthMap> load_depths(const std::string& dir, double scale) {
    std::vector<DepthMap> out;
    for (const auto& p : list_frame_files(dir))
        out.push_back(read_depth_any(p, scale));
    if (out.empty())
        throw std::runtime_error("no depth maps found in " + dir);
    return out;
}

// Degraded frames live either directly in DIR or under DIR/degraded.
std::string degraded_dir(const std::string& root) {
    const std::string sub = (fs::path(root) / "degraded").string();
    return fs::is_directory(sub) ? sub : root;
}

int cmd_synthesize(const std::string& clean_dir, const std::string& depth_dir,
                   const std::string& scenario_file, uint64_t seed, bool seed_set,
                   const std::string& out_dir, bool raw, double depth_scale) {
    Scenario scenario = load_scenario(scenario_file);
    if (seed_set)
        scenario.seed = seed;
    const auto violations = validate_scenario(scenario);
    if (!violations.empty()) {
        for (const auto& v : violations)
            std::cerr << "scenario violation: " << v << "\n";
        return 2;
    }
    const auto clean = load_frames(clean_dir);
    const auto depth = load_depths(depth_dir, depth_scale);
    SynthesisOptions opts;
    opts.frame_format = raw ? FrameFormat::RawFloat : FrameFormat::Png;
    opts.depth_scale = depth_scale;
    const SynthesisResult result = synthesize_video(clean, depth, scenario, opts);

    fs::create_directories(fs::path(out_dir) / "degraded");
    for (size_t i = 0; i < result.degraded.size(); ++i)
        write_frame((fs::path(out_dir) / "degraded" /
                     frame_name(static_cast<int>(i), opts.frame_format)).string(),
                    result.degraded[i], opts.frame_format);
    write_manifest((fs::path(out_dir) / "manifest.json").string(), result.manifest);
    write_metadata_jsonl((fs::path(out_dir) / "metadata.jsonl").string(),
                         result.metadata);
    std::cout << "synthesized " << result.degraded.size() << " frames -> "
              << out_dir << "\n";
    return 0;
}

int cmd_dehaze(const std::string& in_dir, const std::string& depth_dir,
               bool use_metadata, const std::string& out_dir, bool raw,
               double depth_scale) {
    const auto degraded = load_frames(degraded_dir(in_dir));
    const auto depth = load_depths(depth_dir, depth_scale);
    std::vector<Frame> restored;
    if (use_metadata) {
        const std::string manifest_path = (fs::path(in_dir) / "manifest.json").string();
        const std::string meta_path = (fs::path(in_dir) / "metadata.jsonl").string();
        if (!fs::exists(manifest_path) || !fs::exists(meta_path)) {
            std::cerr << "error: --use-metadata requires manifest.json and "
                         "metadata.jsonl under "
                      << in_dir << "\n";
            return 2;
        }
        const DatasetManifest manifest = read_manifest(manifest_path);
        const auto metadata = read_metadata_jsonl(meta_path);
        restored = run_dehaze(degraded, depth, DehazeMode::GivenBeta, &manifest, &metadata);
    } else {
        restored = run_dehaze(degraded, depth, DehazeMode::Search);
    }
    const FrameFormat fmt = raw ? FrameFormat::RawFloat : FrameFormat::Png;
    fs::create_directories(out_dir);
    for (size_t i = 0; i < restored.size(); ++i)
        write_frame((fs::path(out_dir) / frame_name(static_cast<int>(i), fmt)).string(),
                    restored[i], fmt);
    std::cout << "dehazed " << restored.size() << " frames -> " << out_dir << "\n";
    return 0;
}

int cmd_evaluate(const std::string& restored_dir, const std::string& reference_dir,
                 const std::string& report_file, bool csv) {
    const auto restored = load_frames(restored_dir);
    const auto reference = load_frames(reference_dir);
    const MetricReport report = evaluate_video(restored, reference);
    std::ofstream out(report_file);
    if (!out)
        throw std::runtime_error("cannot write " + report_file);
    if (csv) {
        out << "frame,psnr_db,ssim\n";
        for (const auto& e : report.per_frame)
            out << e.frame_index << "," << e.psnr_db << "," << e.ssim << "\n";
        out << "mean," << report.mean_psnr << "," << report.mean_ssim << "\n";
    } else {
        Json frames = Json::array();
        for (const auto& e : report.per_frame)
            frames.push_back(Json{{"frame", e.frame_index},
                                  {"psnr_db", std::isinf(e.psnr_db) ? Json("inf") : Json(e.psnr_db)},
                                  {"ssim", e.ssim}});
        out << Json{{"per_frame", frames},
                    {"mean_psnr_db", report.mean_psnr},
                    {"mean_ssim", report.mean_ssim},
                    {"infinite_psnr_frames", report.infinite_psnr_count},
                    {"ssim_convention", "per-channel-averaged, 11x11 gaussian sigma=1.5"}}
                   .dump(2)
            << "\n";
    }
    std::cout << "mean PSNR " << report.mean_psnr << " dB, mean SSIM "
              << report.mean_ssim << " (" << report.infinite_psnr_count
              << " identical frames excluded from PSNR mean)\n";
    return 0;
}

int cmd_trace(const std::string& in_dir, int column, const std::string& out_file) {
    const auto video = load_frames(degraded_dir(in_dir));
    const Frame slice = trace_pixel_line(video, column);
    write_frame(out_file, slice, detect_format(out_file));
    std::cout << "wrote " << slice.width << "x" << slice.height << " trace -> "
              << out_file << "\n";
    return 0;
}

int cmd_validate(const std::string& scenario_file) {
    const Scenario scenario = load_scenario(scenario_file);
    const auto violations = validate_scenario(scenario);
    if (violations.empty()) {
        std::cout << "ok\n";
        return 0;
    }
    for (const auto& v : violations)
        std::cout << "violation: " << v << "\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SEUD weather degradation synthesis and evaluation"};
    app.require_subcommand(1);

    std::string clean_dir, depth_dir, scenario_file, out_dir, in_dir;
    std::string restored_dir, reference_dir, report_file, out_file;
    uint64_t seed = 0;
    bool raw = false, use_metadata = false, csv = false;
    double depth_scale = 1.0;
    int column = 0;

    auto* synth = app.add_subcommand("synthesize", "generate a degraded dataset");
    synth->add_option("--clean", clean_dir, "directory of clean frames")->required();
    synth->add_option("--depth", depth_dir, "directory of depth maps")->required();
    synth->add_option("--scenario", scenario_file, "scenario JSON")->required();
    auto* seed_opt = synth->add_option("--seed", seed, "override the scenario seed");
    synth->add_option("--out", out_dir, "output dataset root")->required();
    synth->add_flag("--raw", raw, "write raw float32 frames instead of PNG");
    synth->add_option("--depth-scale", depth_scale, "scale for 16-bit PNG depth");

    auto* deh = app.add_subcommand("dehaze", "physics-guided coarse dehazing");
    deh->add_option("--in", in_dir, "dataset root or frame directory")->required();
    deh->add_option("--depth", depth_dir, "directory of depth maps")->required();
    deh->add_flag("--use-metadata", use_metadata, "use manifest/metadata beta and airlight");
    deh->add_option("--out", out_dir, "output directory for restored frames")->required();
    deh->add_flag("--raw", raw, "write raw float32 frames");
    deh->add_option("--depth-scale", depth_scale, "scale for 16-bit PNG depth");

    auto* eval = app.add_subcommand("evaluate", "PSNR/SSIM against a reference");
    eval->add_option("--restored", restored_dir)->required();
    eval->add_option("--reference", reference_dir)->required();
    eval->add_option("--report", report_file)->required();
    eval->add_flag("--csv", csv, "CSV report instead of JSON");

    auto* trace = app.add_subcommand("trace", "temporal slice of one pixel column");
    trace->add_option("--in", in_dir, "dataset root or frame directory")->required();
    trace->add_option("--column", column)->required();
    trace->add_option("--out", out_file)->required();

    auto* val = app.add_subcommand("validate", "check a scenario against its setting");
    val->add_option("--scenario", scenario_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (synth->parsed())
            return cmd_synthesize(clean_dir, depth_dir, scenario_file, seed,
                                  seed_opt->count() > 0, out_dir, raw, depth_scale);
        if (deh->parsed())
            return cmd_dehaze(in_dir, depth_dir, use_metadata, out_dir, raw, depth_scale);
        if (eval->parsed())
            return cmd_evaluate(restored_dir, reference_dir, report_file, csv);
        if (trace->parsed())
            return cmd_trace(in_dir, column, out_file);
        if (val->parsed())
            return cmd_validate(scenario_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
