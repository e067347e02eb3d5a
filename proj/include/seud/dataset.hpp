// Scenario config, dataset manifest, and per-frame metadata sidecars.
// "Config in, manifest out": the manifest echoes the scenario plus every
// parameter in force, so a dataset can be regenerated bit-exactly from it.

#pragma once

#include "seud/haze.hpp"
#include "seud/image_io.hpp"
#include "seud/precipitation.hpp"
#include "seud/profiles.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace seud {

using Json = nlohmann::json;

// Scenario <-> JSON (one-to-one with the Scenario type; profile peaks are
// taken from each schedule's peak_value).
Json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);
Scenario load_scenario(const std::string& path);

Json particle_config_to_json(const ParticleConfig& cfg);
ParticleConfig particle_config_from_json(const Json& j, const ParticleConfig& defaults);

// Ground truth realized per frame (what synthesis actually used).
struct FrameMeta {
    int frame_index = 0;
    double beta = 0.0;
    double rain_density = 0.0;
    double snow_density = 0.0;
    MultiHot active{0, 0, 0};
    int segment_index = 0;
    uint64_t rain_spawned = 0, rain_alive = 0;
    uint64_t snow_spawned = 0, snow_alive = 0;
};

Json frame_meta_to_json(const FrameMeta& m);
FrameMeta frame_meta_from_json(const Json& j);

void write_metadata_jsonl(const std::string& path, const std::vector<FrameMeta>& metas);
std::vector<FrameMeta> read_metadata_jsonl(const std::string& path);

struct DatasetManifest {
    int layout_version = 1;
    Scenario scenario;
    uint64_t seed = 0;
    int frame_count = 0;
    int width = 0, height = 0;
    FrameFormat frame_format = FrameFormat::Png;
    double depth_scale = 1.0;
    Rgb airlight{1.0f, 1.0f, 1.0f};
    double epsilon = kDefaultEpsilon;
    double beta_min = kDefaultBetaMin;
    double beta_max = kDefaultBetaMax;
    ParticleConfig rain_config;
    ParticleConfig snow_config;
    std::vector<SegmentLabel> labels;
    std::string compositing_order = "spawn-id"; // or "back-to-front"
    std::string pipeline_order = "haze-then-particles";
};

Json manifest_to_json(const DatasetManifest& m);
DatasetManifest manifest_from_json(const Json& j);
void write_manifest(const std::string& path, const DatasetManifest& m);
DatasetManifest read_manifest(const std::string& path);

// Sorted .png/.f32 files in a directory.
std::vector<std::string> list_frame_files(const std::string& dir);

} // namespace seud
