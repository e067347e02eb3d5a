#include "seud/dataset.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace seud {

namespace {

Json profile_to_json(const IntensityProfile& p) {
    return Json{{"kind", to_string(p.kind)},
                {"t_start", p.t_start},
                {"t_end", p.t_end},
                {"step_count", p.step_count},
                {"ramp_fraction", p.ramp_fraction},
                {"sigma", p.sigma}};
}

IntensityProfile profile_from_json(const Json& j) {
    IntensityProfile p;
    p.kind = profile_kind_from_string(j.at("kind").get<std::string>());
    p.t_start = j.at("t_start").get<double>();
    p.t_end = j.at("t_end").get<double>();
    p.step_count = j.value("step_count", 3);
    p.ramp_fraction = j.value("ramp_fraction", 0.1);
    p.sigma = j.value("sigma", 0.0);
    return p;
}

} // namespace

Json scenario_to_json(const Scenario& s) {
    Json schedules = Json::array();
    for (const auto& sch : s.schedules) {
        schedules.push_back(Json{{"type", to_string(sch.type)},
                                 {"peak_value", sch.peak_value},
                                 {"profile", profile_to_json(sch.profile)}});
    }
    return Json{{"setting", s.setting},
                {"duration", s.duration},
                {"segment_length", s.segment_length},
                {"seed", s.seed},
                {"transition", s.transition == TransitionStyle::Cut ? "cut" : "fade"},
                {"schedules", schedules}};
}

Scenario scenario_from_json(const Json& j) {
    Scenario s;
    s.setting = j.at("setting").get<int>();
    s.duration = j.at("duration").get<int>();
    s.segment_length = j.value("segment_length", 12);
    s.seed = j.value("seed", static_cast<uint64_t>(0));
    const std::string tr = j.value("transition", std::string("cut"));
    if (tr != "cut" && tr != "fade")
        throw std::invalid_argument("scenario: transition must be cut or fade");
    s.transition = tr == "cut" ? TransitionStyle::Cut : TransitionStyle::Fade;
    for (const auto& je : j.at("schedules")) {
        DegradationSchedule sch;
        sch.type = degradation_type_from_string(je.at("type").get<std::string>());
        sch.peak_value = je.at("peak_value").get<double>();
        sch.profile = profile_from_json(je.at("profile"));
        sch.profile.peak = sch.peak_value;
        s.schedules.push_back(sch);
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open scenario file " + path);
    Json j;
    in >> j;
    return scenario_from_json(j);
}

Json particle_config_to_json(const ParticleConfig& cfg) {
    return Json{{"gravity0", cfg.gravity0},
                {"speed0", cfg.speed0},
                {"base_length", cfg.base_length},
                {"base_thickness", cfg.base_thickness},
                {"base_radius", cfg.base_radius},
                {"base_opacity", cfg.base_opacity},
                {"exposure", cfg.exposure},
                {"radiance", cfg.radiance},
                {"wind_theta", cfg.wind_theta},
                {"wind_sigma", cfg.wind_sigma},
                {"wind_max", cfg.wind_max},
                {"wind_mean_x", cfg.wind_mean_x},
                {"wind_mean_y", cfg.wind_mean_y},
                {"z_near_frac", cfg.z_near_frac},
                {"z_far_frac", cfg.z_far_frac},
                {"max_scene_depth", cfg.max_scene_depth},
                {"lifetime", cfg.lifetime},
                {"depth_sorted_compositing", cfg.depth_sorted_compositing}};
}

ParticleConfig particle_config_from_json(const Json& j, const ParticleConfig& defaults) {
    ParticleConfig cfg = defaults;
    cfg.gravity0 = j.value("gravity0", cfg.gravity0);
    cfg.speed0 = j.value("speed0", cfg.speed0);
    cfg.base_length = j.value("base_length", cfg.base_length);
    cfg.base_thickness = j.value("base_thickness", cfg.base_thickness);
    cfg.base_radius = j.value("base_radius", cfg.base_radius);
    cfg.base_opacity = j.value("base_opacity", cfg.base_opacity);
    cfg.exposure = j.value("exposure", cfg.exposure);
    cfg.radiance = j.value("radiance", cfg.radiance);
    cfg.wind_theta = j.value("wind_theta", cfg.wind_theta);
    cfg.wind_sigma = j.value("wind_sigma", cfg.wind_sigma);
    cfg.wind_max = j.value("wind_max", cfg.wind_max);
    cfg.wind_mean_x = j.value("wind_mean_x", cfg.wind_mean_x);
    cfg.wind_mean_y = j.value("wind_mean_y", cfg.wind_mean_y);
    cfg.z_near_frac = j.value("z_near_frac", cfg.z_near_frac);
    cfg.z_far_frac = j.value("z_far_frac", cfg.z_far_frac);
    cfg.max_scene_depth = j.value("max_scene_depth", cfg.max_scene_depth);
    cfg.lifetime = j.value("lifetime", cfg.lifetime);
    cfg.depth_sorted_compositing =
        j.value("depth_sorted_compositing", cfg.depth_sorted_compositing);
    return cfg;
}

Json frame_meta_to_json(const FrameMeta& m) {
    return Json{{"frame", m.frame_index},
                {"beta", m.beta},
                {"density", Json{{"rain", m.rain_density}, {"snow", m.snow_density}}},
                {"active", Json{{"haze", m.active[0]}, {"rain", m.active[1]}, {"snow", m.active[2]}}},
                {"segment", m.segment_index},
                {"spawned", Json{{"rain", m.rain_spawned}, {"snow", m.snow_spawned}}},
                {"alive", Json{{"rain", m.rain_alive}, {"snow", m.snow_alive}}}};
}

FrameMeta frame_meta_from_json(const Json& j) {
    FrameMeta m;
    m.frame_index = j.at("frame").get<int>();
    m.beta = j.at("beta").get<double>();
    m.rain_density = j.at("density").at("rain").get<double>();
    m.snow_density = j.at("density").at("snow").get<double>();
    m.active = {j.at("active").at("haze").get<int>(),
                j.at("active").at("rain").get<int>(),
                j.at("active").at("snow").get<int>()};
    m.segment_index = j.at("segment").get<int>();
    m.rain_spawned = j.at("spawned").at("rain").get<uint64_t>();
    m.snow_spawned = j.at("spawned").at("snow").get<uint64_t>();
    m.rain_alive = j.at("alive").at("rain").get<uint64_t>();
    m.snow_alive = j.at("alive").at("snow").get<uint64_t>();
    return m;
}

void write_metadata_jsonl(const std::string& path, const std::vector<FrameMeta>& metas) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    for (const auto& m : metas)
        out << frame_meta_to_json(m).dump() << '\n';
}

std::vector<FrameMeta> read_metadata_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open metadata " + path);
    std::vector<FrameMeta> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        out.push_back(frame_meta_from_json(Json::parse(line)));
    }
    return out;
}

Json manifest_to_json(const DatasetManifest& m) {
    Json labels = Json::array();
    for (const auto& l : m.labels)
        labels.push_back(Json{{"segment", l.segment_index},
                              {"y", Json{{"haze", l.y[0]}, {"rain", l.y[1]}, {"snow", l.y[2]}}}});
    return Json{{"layout_version", m.layout_version},
                {"scenario", scenario_to_json(m.scenario)},
                {"seed", m.seed},
                {"frame_count", m.frame_count},
                {"width", m.width},
                {"height", m.height},
                {"frame_format", m.frame_format == FrameFormat::Png ? "png" : "raw-float"},
                {"depth_scale", m.depth_scale},
                {"airlight", Json::array({m.airlight[0], m.airlight[1], m.airlight[2]})},
                {"epsilon", m.epsilon},
                {"beta_interval", Json::array({m.beta_min, m.beta_max})},
                {"rain_config", particle_config_to_json(m.rain_config)},
                {"snow_config", particle_config_to_json(m.snow_config)},
                {"segment_labels", labels},
                {"compositing_order", m.compositing_order},
                {"pipeline_order", m.pipeline_order}};
}

DatasetManifest manifest_from_json(const Json& j) {
    DatasetManifest m;
    m.layout_version = j.at("layout_version").get<int>();
    m.scenario = scenario_from_json(j.at("scenario"));
    m.seed = j.at("seed").get<uint64_t>();
    m.frame_count = j.at("frame_count").get<int>();
    m.width = j.at("width").get<int>();
    m.height = j.at("height").get<int>();
    m.frame_format = j.at("frame_format").get<std::string>() == "png"
                         ? FrameFormat::Png
                         : FrameFormat::RawFloat;
    m.depth_scale = j.at("depth_scale").get<double>();
    for (int c = 0; c < 3; ++c)
        m.airlight[c] = j.at("airlight")[c].get<float>();
    m.epsilon = j.at("epsilon").get<double>();
    m.beta_min = j.at("beta_interval")[0].get<double>();
    m.beta_max = j.at("beta_interval")[1].get<double>();
    m.rain_config = particle_config_from_json(j.at("rain_config"), ParticleConfig{});
    m.snow_config = particle_config_from_json(j.at("snow_config"), ParticleConfig{});
    for (const auto& jl : j.at("segment_labels")) {
        SegmentLabel l;
        l.segment_index = jl.at("segment").get<int>();
        l.y = {jl.at("y").at("haze").get<int>(), jl.at("y").at("rain").get<int>(),
               jl.at("y").at("snow").get<int>()};
        m.labels.push_back(l);
    }
    m.compositing_order = j.value("compositing_order", std::string("spawn-id"));
    m.pipeline_order = j.value("pipeline_order", std::string("haze-then-particles"));
    return m;
}

void write_manifest(const std::string& path, const DatasetManifest& m) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << manifest_to_json(m).dump(2) << '\n';
}

DatasetManifest read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open manifest " + path);
    Json j;
    in >> j;
    return manifest_from_json(j);
}

std::vector<std::string> list_frame_files(const std::string& dir) {
    std::vector<std::string> out;
    if (!fs::is_directory(dir))
        throw std::runtime_error("not a directory: " + dir);
    for (const auto& e : fs::directory_iterator(dir)) {
        if (!e.is_regular_file())
            continue;
        const std::string ext = e.path().extension().string();
        if (ext == ".png" || ext == ".f32")
            out.push_back(e.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace seud
