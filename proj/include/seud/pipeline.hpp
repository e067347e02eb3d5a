// Orchestration of the full synthesis pipeline: schedule evaluation, haze,
// wind, particle stepping/spawning, compositing, and ground-truth metadata.
// Streaming: only the particle systems persist across frames.

#pragma once

#include "seud/dataset.hpp"
#include "seud/haze.hpp"
#include "seud/metrics.hpp"
#include "seud/precipitation.hpp"
#include "seud/profiles.hpp"

#include <optional>
#include <vector>

namespace seud {

struct SynthesisOptions {
    FrameFormat frame_format = FrameFormat::Png;
    double depth_scale = 1.0;
    std::optional<ParticleConfig> rain_config; // defaults when unset
    std::optional<ParticleConfig> snow_config;
};

class SynthesisSession {
public:
    // Validates the scenario (throws listing violations) and fixes the
    // per-video parameters: airlight sample, particle configs, labels.
    SynthesisSession(const Scenario& scenario, int width, int height,
                     double max_scene_depth, const SynthesisOptions& opts = {});

    // Frames must be fed in order, one call per t in [0, duration).
    Frame process_frame(const Frame& clean, const DepthMap& depth, FrameMeta& meta);

    const DatasetManifest& manifest() const { return manifest_; }

private:
    Scenario scenario_;
    DatasetManifest manifest_;
    std::optional<ParticleSystem> rain_;
    std::optional<ParticleSystem> snow_;
    int next_frame_ = 0;
};

struct SynthesisResult {
    std::vector<Frame> degraded;
    std::vector<FrameMeta> metadata;
    DatasetManifest manifest;
};

SynthesisResult synthesize_video(const std::vector<Frame>& clean,
                                 const std::vector<DepthMap>& depth,
                                 const Scenario& scenario,
                                 const SynthesisOptions& opts = {});

enum class DehazeMode { GivenBeta, Search };

// GivenBeta uses the manifest airlight and per-frame metadata beta;
// Search estimates airlight per frame and runs the scalar beta search on
// depth normalized to unit maximum.
std::vector<Frame> run_dehaze(const std::vector<Frame>& degraded,
                              const std::vector<DepthMap>& depth,
                              DehazeMode mode,
                              const DatasetManifest* manifest = nullptr,
                              const std::vector<FrameMeta>* metadata = nullptr);

// Row t of the result is the video's column slice at frame t
// (output: frame-height wide, frame-count tall).
Frame trace_pixel_line(const std::vector<Frame>& video, int column);

} // namespace seud
