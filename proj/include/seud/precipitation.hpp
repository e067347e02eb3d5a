// Stateful rain/snow particle simulation: Poisson spawning driven by the
// density schedule, depth-correlated attributes, gravity + Ornstein-
// Uhlenbeck wind motion, scene-depth occlusion, sprite rendering, and
// forward per-particle alpha compositing.

#pragma once

#include "seud/frame.hpp"
#include "seud/haze.hpp"
#include "seud/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace seud {

enum class ParticleKind { Rain, Snow };

struct ParticleConfig {
    double gravity0 = 40.0;     // image-plane gravity px/frame^2 at Z=1
    double speed0 = 30.0;       // initial fall speed px/frame at Z=1
    double base_length = 12.0;  // rain streak length px at Z=1
    double base_thickness = 1.5;
    double base_radius = 3.0;   // snow blob radius px at Z=1
    double base_opacity = 0.6;
    double exposure = 0.8;      // frames of motion blur on rain streaks
    double radiance = 0.85;     // constant gray sprite radiance
    double wind_theta = 0.1;    // OU mean reversion
    double wind_sigma = 0.15;   // OU noise amplitude px/frame^2
    double wind_max = 3.0;
    double wind_mean_x = 0.0;
    double wind_mean_y = 0.0;
    double z_near_frac = 0.2; // particle depth range as fractions of
    double z_far_frac = 1.0;  // max scene depth, sampled log-uniform
    double max_scene_depth = 1.0;
    int lifetime = 0; // frames; 0 = auto from fall speed and frame height
    bool depth_sorted_compositing = false;
};

ParticleConfig default_rain_config(double max_scene_depth);
ParticleConfig default_snow_config(double max_scene_depth);

struct Particle {
    ParticleKind kind = ParticleKind::Rain;
    double x = 0.0, y = 0.0;   // image-plane position, subpixel
    double z = 1.0;            // scene depth along the viewing ray
    double ux = 0.0, uy = 0.0; // image-plane velocity px/frame
    double opacity = 1.0;      // base opacity in (0, 1]
    double length = 1.0;       // streak length px (rain)
    double thickness = 1.0;    // streak cross-section px (rain) / blob radius (snow)
    int age = 0;
    int lifetime = 1;
    uint64_t id = 0;
};

struct WindState {
    double wx = 0.0;
    double wy = 0.0;
};

struct ParticleSystem {
    ParticleKind kind = ParticleKind::Rain;
    ParticleConfig config;
    uint64_t seed = 0;
    WindState wind;
    std::vector<Particle> particles; // kept in ascending id order
    int frame_index = 0;
    uint64_t next_id = 0;
    uint64_t spawned_this_frame = 0;
};

// Unit draws behind a particle's physical attributes; exposed so tests can
// fix the draw and vary depth.
struct UnitDraws {
    double size_u = 0.5;    // scales length/radius
    double thick_u = 0.5;   // scales thickness
    double opacity_u = 0.5; // scales base opacity
};

// Materializes depth-correlated attributes: sizes scale as 1/Z, opacity as
// 1/(1+Z), initial fall speed as 1/Z.
Particle make_particle(const ParticleConfig& cfg, ParticleKind kind,
                       double x, double y, double z, const UnitDraws& draws,
                       int frame_height, uint64_t id);

// One Ornstein-Uhlenbeck step, seeded by (seed, "wind", t).
WindState step_wind(const WindState& w, const ParticleConfig& cfg,
                    uint64_t seed, int t);

// Advances wind then every particle (u += g(Z)+w, pos += u, age += 1);
// removes particles past their lifetime or outside the spawn band / image.
void step_particles(ParticleSystem& sys, int width, int height);

// Adds Poisson(density * W*H / 1e6) particles; draw order is fixed by the
// counter RNG so results are independent of call context.
void spawn(ParticleSystem& sys, double density_per_mpx, int width, int height);

// Rendered sprite: alpha over a bounding box plus flat radiance.
struct Sprite {
    int x0 = 0, y0 = 0;
    int width = 0, height = 0;
    std::vector<float> alpha;
    float at(int lx, int ly) const { return alpha[static_cast<size_t>(ly) * width + lx]; }
};

// Rain: anti-aliased streak along the velocity with Gaussian cross-section;
// snow: isotropic Gaussian blob. Peak alpha equals the particle opacity.
Sprite render_sprite(const Particle& p, double exposure = 0.8);

// mask = 1 where the particle is nearer than the scene (strict Z < depth).
// Box given in image coordinates, clipped by the caller.
std::vector<uint8_t> visibility_mask(const Particle& p, const DepthMap& scene_depth,
                                     int x0, int y0, int w, int h);

// Optional haze context: particle radiance is pulled toward the airlight in
// proportion to the transmission deficit at the particle's depth.
struct HazeContext {
    double beta = 0.0;
    Rgb airlight{1.0f, 1.0f, 1.0f};
};

// Forward per-particle compositing in ascending id order (or back-to-front
// when depth_sorted_compositing is set): L' = (1-aM)L + aM*P.
Frame composite(const Frame& base, const ParticleSystem& sys,
                const DepthMap& scene_depth,
                const std::optional<HazeContext>& haze = std::nullopt);

} // namespace seud
