#include "seud/precipitation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seud {

ParticleConfig default_rain_config(double max_scene_depth) {
    ParticleConfig cfg;
    cfg.gravity0 = 40.0;
    cfg.speed0 = 30.0;
    cfg.base_length = 12.0;
    cfg.base_thickness = 1.5;
    cfg.base_opacity = 0.6;
    cfg.exposure = 0.8;
    cfg.radiance = 0.85;
    cfg.max_scene_depth = max_scene_depth;
    return cfg;
}

ParticleConfig default_snow_config(double max_scene_depth) {
    ParticleConfig cfg;
    cfg.gravity0 = 4.0;
    cfg.speed0 = 6.0;
    cfg.base_radius = 3.0;
    cfg.base_opacity = 0.7;
    cfg.radiance = 0.95;
    cfg.wind_sigma = 0.25; // snow drifts more
    cfg.max_scene_depth = max_scene_depth;
    return cfg;
}

Particle make_particle(const ParticleConfig& cfg, ParticleKind kind,
                       double x, double y, double z, const UnitDraws& draws,
                       int frame_height, uint64_t id) {
    if (!(z > 0.0))
        throw std::invalid_argument("make_particle: particle depth must be > 0");
    Particle p;
    p.kind = kind;
    p.x = x;
    p.y = y;
    p.z = z;
    p.id = id;
    const double size_mult = 0.7 + 0.6 * draws.size_u;
    const double thick_mult = 0.7 + 0.6 * draws.thick_u;
    const double opac_mult = 0.8 + 0.4 * draws.opacity_u;
    if (kind == ParticleKind::Rain) {
        p.length = cfg.base_length * size_mult / z;
        p.thickness = cfg.base_thickness * thick_mult / z;
    } else {
        p.thickness = cfg.base_radius * size_mult / z; // blob radius
        p.length = p.thickness;
    }
    p.opacity = std::clamp(cfg.base_opacity * opac_mult / (1.0 + z), 1e-4, 1.0);
    p.ux = 0.0;
    p.uy = cfg.speed0 / z;
    if (cfg.lifetime > 0) {
        p.lifetime = cfg.lifetime;
    } else {
        // ~3 frame-heights of travel at the initial fall speed
        const double frames = 3.0 * frame_height * z / std::max(cfg.speed0, 1e-6);
        p.lifetime = static_cast<int>(std::clamp(frames, 1.0, 100000.0));
    }
    return p;
}

WindState step_wind(const WindState& w, const ParticleConfig& cfg,
                    uint64_t seed, int t) {
    DrawStream rng(seed, stream_tag("wind"), static_cast<uint64_t>(t));
    const double nx = rng.next_normal();
    const double ny = rng.next_normal();
    WindState out;
    out.wx = w.wx + cfg.wind_theta * (cfg.wind_mean_x - w.wx) + cfg.wind_sigma * nx;
    out.wy = w.wy + cfg.wind_theta * (cfg.wind_mean_y - w.wy) + cfg.wind_sigma * ny;
    const double mag = std::hypot(out.wx, out.wy);
    if (mag > cfg.wind_max && mag > 0.0) {
        out.wx *= cfg.wind_max / mag;
        out.wy *= cfg.wind_max / mag;
    }
    return out;
}

void step_particles(ParticleSystem& sys, int width, int height) {
    sys.wind = step_wind(sys.wind, sys.config, sys.seed, sys.frame_index);
    const double x_lo = -0.1 * width, x_hi = 1.1 * width;
    const double y_lo = -0.15 * height;
    std::vector<Particle> alive;
    alive.reserve(sys.particles.size());
    for (Particle p : sys.particles) {
        p.ux += sys.wind.wx;
        p.uy += sys.config.gravity0 / p.z + sys.wind.wy;
        p.x += p.ux;
        p.y += p.uy;
        p.age += 1;
        if (p.age >= p.lifetime)
            continue;
        if (p.x < x_lo || p.x > x_hi || p.y < y_lo || p.y >= height)
            continue;
        alive.push_back(p);
    }
    sys.particles = std::move(alive);
}

void spawn(ParticleSystem& sys, double density_per_mpx, int width, int height) {
    if (density_per_mpx < 0.0)
        throw std::invalid_argument("spawn: density must be >= 0");
    DrawStream rng(sys.seed, stream_tag("spawn"), static_cast<uint64_t>(sys.frame_index));
    const double mean = density_per_mpx * static_cast<double>(width) * height / 1e6;
    const int n = rng.next_poisson(mean);
    const double z_lo = sys.config.z_near_frac * sys.config.max_scene_depth;
    const double z_hi = sys.config.z_far_frac * sys.config.max_scene_depth;
    for (int i = 0; i < n; ++i) {
        const double x = rng.next_uniform(-0.1 * width, 1.1 * width);
        const double y = rng.next_uniform(-0.15 * height, 0.0);
        const double z = std::exp(rng.next_uniform(std::log(z_lo), std::log(z_hi)));
        UnitDraws draws{rng.next_u01(), rng.next_u01(), rng.next_u01()};
        sys.particles.push_back(
            make_particle(sys.config, sys.kind, x, y, z, draws, height, sys.next_id++));
    }
    sys.spawned_this_frame = static_cast<uint64_t>(n);
}

namespace {

double dist_to_segment(double px, double py, double ax, double ay,
                       double bx, double by) {
    const double dx = bx - ax, dy = by - ay;
    const double len2 = dx * dx + dy * dy;
    double s = 0.0;
    if (len2 > 0.0)
        s = std::clamp(((px - ax) * dx + (py - ay) * dy) / len2, 0.0, 1.0);
    const double cx = ax + s * dx, cy = ay + s * dy;
    return std::hypot(px - cx, py - cy);
}

} // namespace

Sprite render_sprite(const Particle& p, double exposure) {
    Sprite s;
    if (p.kind == ParticleKind::Snow) {
        const double sigma = std::max(p.thickness / 2.0, 0.3);
        const double r = 3.0 * sigma + 1.0;
        s.x0 = static_cast<int>(std::floor(p.x - r));
        s.y0 = static_cast<int>(std::floor(p.y - r));
        s.width = static_cast<int>(std::ceil(p.x + r)) - s.x0 + 1;
        s.height = static_cast<int>(std::ceil(p.y + r)) - s.y0 + 1;
        s.alpha.assign(static_cast<size_t>(s.width) * s.height, 0.0f);
        for (int ly = 0; ly < s.height; ++ly) {
            for (int lx = 0; lx < s.width; ++lx) {
                const double cx = s.x0 + lx + 0.5, cy = s.y0 + ly + 0.5;
                const double d2 = (cx - p.x) * (cx - p.x) + (cy - p.y) * (cy - p.y);
                s.alpha[static_cast<size_t>(ly) * s.width + lx] =
                    static_cast<float>(p.opacity * std::exp(-d2 / (2.0 * sigma * sigma)));
            }
        }
        return s;
    }
    // Rain: streak from the current position backwards along the velocity,
    // motion-blur-extended, Gaussian cross-section.
    const double speed = std::hypot(p.ux, p.uy);
    double dx = 0.0, dy = 1.0;
    if (speed > 1e-9) {
        dx = p.ux / speed;
        dy = p.uy / speed;
    }
    const double eff_len = std::max(p.length, speed * exposure);
    const double tail_x = p.x - dx * eff_len, tail_y = p.y - dy * eff_len;
    const double sigma = std::max(p.thickness / 2.0, 0.3);
    const double pad = 3.0 * sigma + 1.0;
    const double min_x = std::min(p.x, tail_x) - pad, max_x = std::max(p.x, tail_x) + pad;
    const double min_y = std::min(p.y, tail_y) - pad, max_y = std::max(p.y, tail_y) + pad;
    s.x0 = static_cast<int>(std::floor(min_x));
    s.y0 = static_cast<int>(std::floor(min_y));
    s.width = static_cast<int>(std::ceil(max_x)) - s.x0 + 1;
    s.height = static_cast<int>(std::ceil(max_y)) - s.y0 + 1;
    s.alpha.assign(static_cast<size_t>(s.width) * s.height, 0.0f);
    for (int ly = 0; ly < s.height; ++ly) {
        for (int lx = 0; lx < s.width; ++lx) {
            const double cx = s.x0 + lx + 0.5, cy = s.y0 + ly + 0.5;
            const double d = dist_to_segment(cx, cy, tail_x, tail_y, p.x, p.y);
            s.alpha[static_cast<size_t>(ly) * s.width + lx] =
                static_cast<float>(p.opacity * std::exp(-d * d / (2.0 * sigma * sigma)));
        }
    }
    return s;
}

std::vector<uint8_t> visibility_mask(const Particle& p, const DepthMap& scene_depth,
                                     int x0, int y0, int w, int h) {
    std::vector<uint8_t> mask(static_cast<size_t>(w) * h, 0);
    for (int ly = 0; ly < h; ++ly) {
        const int y = y0 + ly;
        if (y < 0 || y >= scene_depth.height)
            continue;
        for (int lx = 0; lx < w; ++lx) {
            const int x = x0 + lx;
            if (x < 0 || x >= scene_depth.width)
                continue;
            mask[static_cast<size_t>(ly) * w + lx] =
                p.z < scene_depth.at(x, y) ? 1 : 0;
        }
    }
    return mask;
}

Frame composite(const Frame& base, const ParticleSystem& sys,
                const DepthMap& scene_depth, const std::optional<HazeContext>& haze) {
    if (base.width != scene_depth.width || base.height != scene_depth.height)
        throw std::invalid_argument("composite: dimension mismatch");
    Frame out = base;

    std::vector<const Particle*> order;
    order.reserve(sys.particles.size());
    for (const auto& p : sys.particles)
        order.push_back(&p);
    if (sys.config.depth_sorted_compositing) {
        std::stable_sort(order.begin(), order.end(),
                         [](const Particle* a, const Particle* b) { return a->z > b->z; });
    }

    for (const Particle* p : order) {
        const Sprite sp = render_sprite(*p, sys.config.exposure);
        float radiance[3];
        for (int c = 0; c < 3; ++c)
            radiance[c] = static_cast<float>(sys.config.radiance);
        if (haze && haze->beta > 0.0) {
            // distant particles inherit airlight tint through the haze volume
            const double deficit = 1.0 - std::exp(-haze->beta * p->z);
            for (int c = 0; c < 3; ++c)
                radiance[c] += static_cast<float>(
                    (haze->airlight[c] - radiance[c]) * 0.3 * deficit);
        }
        for (int ly = 0; ly < sp.height; ++ly) {
            const int y = sp.y0 + ly;
            if (y < 0 || y >= base.height)
                continue;
            for (int lx = 0; lx < sp.width; ++lx) {
                const int x = sp.x0 + lx;
                if (x < 0 || x >= base.width)
                    continue;
                if (!(p->z < scene_depth.at(x, y)))
                    continue; // occluded: strict Z < scene depth
                const float a = sp.at(lx, ly);
                if (a <= 0.0f)
                    continue;
                for (int c = 0; c < 3; ++c) {
                    float& v = out.at(x, y, c);
                    v = (1.0f - a) * v + a * radiance[c];
                }
            }
        }
    }
    return clamp_frame(out);
}

} // namespace seud
