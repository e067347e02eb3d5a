#include "seud/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seud {

namespace {

Rgb sample_airlight(uint64_t seed) {
    // constant per video: channels in [0.7, 1.0], spread <= 0.05
    DrawStream rng(seed, stream_tag("airlight"), 0);
    const double base = rng.next_uniform(0.7, 0.95);
    Rgb a{};
    for (int c = 0; c < 3; ++c)
        a[c] = static_cast<float>(std::min(base + rng.next_uniform(0.0, 0.05), 1.0));
    return a;
}

double sum_density(const Scenario& s, DegradationType type, double t) {
    double v = 0.0;
    for (const auto& sch : s.schedules)
        if (sch.type == type)
            v += schedule_value(sch, t);
    return v;
}

} // namespace

SynthesisSession::SynthesisSession(const Scenario& scenario, int width, int height,
                                   double max_scene_depth, const SynthesisOptions& opts)
    : scenario_(scenario) {
    const auto violations = validate_scenario(scenario);
    if (!violations.empty()) {
        std::string msg = "invalid scenario:";
        for (const auto& v : violations)
            msg += "\n  " + v;
        throw std::invalid_argument(msg);
    }

    manifest_.scenario = scenario;
    manifest_.seed = scenario.seed;
    manifest_.frame_count = scenario.duration;
    manifest_.width = width;
    manifest_.height = height;
    manifest_.frame_format = opts.frame_format;
    manifest_.depth_scale = opts.depth_scale;
    manifest_.airlight = sample_airlight(scenario.seed);
    manifest_.labels = segment_labels(scenario);
    manifest_.rain_config =
        opts.rain_config.value_or(default_rain_config(max_scene_depth));
    manifest_.snow_config =
        opts.snow_config.value_or(default_snow_config(max_scene_depth));

    const bool has_rain = std::any_of(scenario.schedules.begin(), scenario.schedules.end(),
                                      [](const auto& s) { return s.type == DegradationType::Rain; });
    const bool has_snow = std::any_of(scenario.schedules.begin(), scenario.schedules.end(),
                                      [](const auto& s) { return s.type == DegradationType::Snow; });
    if (has_rain) {
        rain_.emplace();
        rain_->kind = ParticleKind::Rain;
        rain_->config = manifest_.rain_config;
        rain_->seed = mix64(scenario.seed ^ stream_tag("rain-system"));
    }
    if (has_snow) {
        snow_.emplace();
        snow_->kind = ParticleKind::Snow;
        snow_->config = manifest_.snow_config;
        snow_->seed = mix64(scenario.seed ^ stream_tag("snow-system"));
    }
    manifest_.compositing_order =
        manifest_.rain_config.depth_sorted_compositing ? "back-to-front" : "spawn-id";
}

Frame SynthesisSession::process_frame(const Frame& clean, const DepthMap& depth,
                                      FrameMeta& meta) {
    if (next_frame_ >= scenario_.duration)
        throw std::runtime_error("process_frame: past scenario duration");
    if (clean.width != manifest_.width || clean.height != manifest_.height ||
        depth.width != manifest_.width || depth.height != manifest_.height)
        throw std::invalid_argument("process_frame: dimension mismatch");
    const int t = next_frame_++;

    meta = FrameMeta{};
    meta.frame_index = t;
    meta.segment_index = t / std::max(scenario_.segment_length, 1);
    meta.beta = sum_density(scenario_, DegradationType::Haze, t);
    meta.rain_density = sum_density(scenario_, DegradationType::Rain, t);
    meta.snow_density = sum_density(scenario_, DegradationType::Snow, t);
    meta.active = {meta.beta > 0.0 ? 1 : 0, meta.rain_density > 0.0 ? 1 : 0,
                   meta.snow_density > 0.0 ? 1 : 0};

    // haze first; the particle layers composite over the hazy frame
    Frame out = clean;
    if (meta.beta > 0.0)
        out = apply_haze(clean, transmission(depth, meta.beta), manifest_.airlight);

    std::optional<HazeContext> haze_ctx;
    if (meta.beta > 0.0)
        haze_ctx = HazeContext{meta.beta, manifest_.airlight};

    if (rain_) {
        rain_->frame_index = t;
        step_particles(*rain_, manifest_.width, manifest_.height);
        spawn(*rain_, meta.rain_density, manifest_.width, manifest_.height);
        meta.rain_spawned = rain_->spawned_this_frame;
        meta.rain_alive = rain_->particles.size();
        if (!rain_->particles.empty())
            out = composite(out, *rain_, depth, haze_ctx);
    }
    if (snow_) {
        snow_->frame_index = t;
        step_particles(*snow_, manifest_.width, manifest_.height);
        spawn(*snow_, meta.snow_density, manifest_.width, manifest_.height);
        meta.snow_spawned = snow_->spawned_this_frame;
        meta.snow_alive = snow_->particles.size();
        if (!snow_->particles.empty())
            out = composite(out, *snow_, depth, haze_ctx);
    }
    return out;
}

SynthesisResult synthesize_video(const std::vector<Frame>& clean,
                                 const std::vector<DepthMap>& depth,
                                 const Scenario& scenario,
                                 const SynthesisOptions& opts) {
    if (clean.empty())
        throw std::invalid_argument("synthesize_video: empty input");
    if (clean.size() != depth.size())
        throw std::invalid_argument("synthesize_video: clean/depth length mismatch");
    if (static_cast<int>(clean.size()) < scenario.duration)
        throw std::invalid_argument("synthesize_video: fewer frames than scenario duration");
    double max_depth = 0.0;
    for (const auto& d : depth)
        max_depth = std::max(max_depth, static_cast<double>(d.max_value()));
    SynthesisSession session(scenario, clean[0].width, clean[0].height,
                             max_depth > 0.0 ? max_depth : 1.0, opts);
    SynthesisResult result;
    for (int t = 0; t < scenario.duration; ++t) {
        FrameMeta meta;
        result.degraded.push_back(session.process_frame(clean[t], depth[t], meta));
        result.metadata.push_back(meta);
    }
    result.manifest = session.manifest();
    return result;
}

std::vector<Frame> run_dehaze(const std::vector<Frame>& degraded,
                              const std::vector<DepthMap>& depth,
                              DehazeMode mode,
                              const DatasetManifest* manifest,
                              const std::vector<FrameMeta>* metadata) {
    if (degraded.size() != depth.size())
        throw std::invalid_argument("run_dehaze: sequence length mismatch");
    if (mode == DehazeMode::GivenBeta) {
        if (!manifest || !metadata)
            throw std::invalid_argument("run_dehaze: given-beta mode requires the metadata sidecar");
        if (metadata->size() < degraded.size())
            throw std::invalid_argument("run_dehaze: metadata shorter than the video");
    }
    std::vector<Frame> restored;
    restored.reserve(degraded.size());
    for (size_t i = 0; i < degraded.size(); ++i) {
        if (mode == DehazeMode::GivenBeta) {
            restored.push_back(dehaze(degraded[i], depth[i], (*metadata)[i].beta,
                                      manifest->airlight, manifest->epsilon));
        } else {
            const Rgb airlight =
                estimate_airlight(degraded[i], kDefaultAirlightPercentile);
            const float dmax = depth[i].max_value();
            DepthMap dn = depth[i];
            if (dmax > 0.0f)
                for (float& v : dn.data)
                    v /= dmax;
            const BetaEstimate est = search_beta(degraded[i], dn, airlight);
            restored.push_back(
                dehaze(degraded[i], dn, est.beta_hat, airlight, kDefaultEpsilon));
        }
    }
    return restored;
}

Frame trace_pixel_line(const std::vector<Frame>& video, int column) {
    if (video.empty())
        throw std::invalid_argument("trace_pixel_line: empty video");
    const int h = video[0].height;
    if (column < 0 || column >= video[0].width)
        throw std::out_of_range("trace_pixel_line: column out of range");
    Frame out(h, static_cast<int>(video.size()));
    for (size_t t = 0; t < video.size(); ++t)
        for (int y = 0; y < h; ++y)
            for (int c = 0; c < 3; ++c)
                out.at(y, static_cast<int>(t), c) = video[t].at(column, y, c);
    return out;
}

} // namespace seud
