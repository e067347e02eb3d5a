// End-to-end acceptance checks. Each criterion prints a single PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include "seud/dataset.hpp"
#include "seud/haze.hpp"
#include "seud/image_io.hpp"
#include "seud/metrics.hpp"
#include "seud/pipeline.hpp"
#include "seud/precipitation.hpp"
#include "seud/profiles.hpp"
#include "seud/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

using namespace seud;

namespace {

int g_failures = 0;

void report(int criterion, const char* title, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, title,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok)
        ++g_failures;
}

Frame textured_frame(int w, int h, uint64_t seed) {
    Frame f(w, h);
    DrawStream rng(seed, stream_tag("acceptance"), 0);
    const double px = rng.next_uniform(0, w), py = rng.next_uniform(0, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double base =
                0.35 + 0.3 * std::sin(x * 0.13 + seed) * std::cos(y * 0.11);
            const double dark = std::hypot(x - px, y - py) < w / 16.0 ? 0.0 : 1.0;
            for (int c = 0; c < 3; ++c)
                f.at(x, y, c) = static_cast<float>(std::clamp(
                    dark * (base + 0.08 * c + rng.next_uniform(-0.05, 0.05)), 0.0, 1.0));
        }
    return f;
}

DepthMap ramp_depth(int w, int h, float max_depth) {
    DepthMap d(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            d.at(x, y) = max_depth * static_cast<float>(x + y) / (w + h - 2);
    return d;
}

Scenario storm_scenario(int duration, uint64_t seed) {
    Scenario s;
    s.setting = 4;
    s.duration = duration;
    s.seed = seed;
    DegradationSchedule haze;
    haze.type = DegradationType::Haze;
    haze.profile = {ProfileKind::Cosine, 0, static_cast<double>(duration), 1.0};
    haze.peak_value = 1.0;
    DegradationSchedule rain;
    rain.type = DegradationType::Rain;
    rain.profile = {ProfileKind::Trapezoid, 0, static_cast<double>(duration), 300.0};
    rain.peak_value = 300.0;
    s.schedules = {haze, rain};
    return s;
}

// ---------------------------------------------------------------------------

void criterion_determinism() {
    const int W = 640, H = 360, T = 100;
    std::vector<Frame> clean;
    std::vector<DepthMap> depth;
    clean.reserve(T);
    depth.reserve(T);
    const Frame base = textured_frame(W, H, 17);
    const DepthMap d = ramp_depth(W, H, 6.0f);
    for (int t = 0; t < T; ++t) {
        clean.push_back(base);
        depth.push_back(d);
    }
    const Scenario s = storm_scenario(T, 20260824);

    const auto t0 = std::chrono::steady_clock::now();
    setenv("SEUD_THREADS", "1", 1);
    const SynthesisResult a = synthesize_video(clean, depth, s);
    setenv("SEUD_THREADS", "4", 1);
    const SynthesisResult b = synthesize_video(clean, depth, s);
    unsetenv("SEUD_THREADS");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool identical = a.degraded.size() == b.degraded.size();
    for (size_t t = 0; identical && t < a.degraded.size(); ++t)
        identical = a.degraded[t].data == b.degraded[t].data;
    const bool meta_same = manifest_to_json(a.manifest) == manifest_to_json(b.manifest);
    char buf[128];
    std::snprintf(buf, sizeof buf, "two 100-frame 640x360 runs in %.1f s", secs);
    report(1, "repeated runs are byte-identical across thread counts",
           identical && meta_same && secs < 60.0, buf);
}

void criterion_zero_intensity() {
    Scenario s;
    s.setting = 5;
    s.duration = 8;
    s.seed = 7;
    std::vector<Frame> clean;
    std::vector<DepthMap> depth;
    for (int t = 0; t < 8; ++t) {
        clean.push_back(textured_frame(64, 48, 40 + t));
        depth.push_back(ramp_depth(64, 48, 3.0f));
    }
    const SynthesisResult r = synthesize_video(clean, depth, s);
    bool ok = true;
    for (int t = 0; t < 8; ++t)
        ok = ok && r.degraded[t].data == clean[t].data;
    report(2, "zero-intensity synthesis is the bitwise identity", ok);
}

void criterion_haze_round_trip() {
    const int W = 160, H = 120, T = 6;
    Scenario s;
    s.setting = 1;
    s.duration = T;
    s.seed = 77;
    DegradationSchedule haze;
    haze.type = DegradationType::Haze;
    haze.profile = {ProfileKind::Constant, 0, static_cast<double>(T), 1.15};
    haze.peak_value = 1.15;
    s.schedules = {haze};

    std::vector<Frame> clean;
    std::vector<DepthMap> depth;
    for (int t = 0; t < T; ++t) {
        clean.push_back(textured_frame(W, H, 60 + t));
        depth.push_back(ramp_depth(W, H, 2.0f)); // min T = exp(-2.3) ~ 0.1
    }
    SynthesisOptions opts;
    opts.frame_format = FrameFormat::RawFloat;
    const SynthesisResult r = synthesize_video(clean, depth, s, opts);
    const auto restored =
        run_dehaze(r.degraded, depth, DehazeMode::GivenBeta, &r.manifest, &r.metadata);
    double worst = 1e9;
    for (int t = 0; t < T; ++t)
        worst = std::min(worst, psnr(restored[t], clean[t]));
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst frame %.1f dB", worst);
    report(3, "given-beta dehazing restores >= 50 dB at min T >= 0.1", worst >= 50.0, buf);
}

void criterion_beta_search() {
    DrawStream rng(4242, stream_tag("acceptance"), 1);
    int hits = 0;
    const int trials = 20;
    for (int i = 0; i < trials; ++i) {
        const double beta_true = rng.next_uniform(0.3, 2.0);
        const Frame clean = textured_frame(96, 72, 500 + i);
        const DepthMap d = ramp_depth(96, 72, 1.0f);
        const Rgb a{0.92f, 0.9f, 0.91f};
        const Frame hazy = apply_haze(clean, transmission(d, beta_true), a);
        const BetaEstimate est = search_beta(hazy, d, a);
        if (std::abs(est.beta_hat - beta_true) / beta_true <= 0.10)
            ++hits;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d/%d within 10%%", hits, trials);
    report(4, "scalar search recovers the synthesis extinction coefficient",
           hits >= 18, buf);
}

void criterion_spawn_statistics() {
    const int trials = 10000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < trials; ++i) {
        ParticleSystem sys;
        sys.kind = ParticleKind::Rain;
        sys.config = default_rain_config(1.0);
        sys.seed = 99;
        sys.frame_index = i;
        spawn(sys, 100.0, 1000, 1000);
        const double n = static_cast<double>(sys.spawned_this_frame);
        sum += n;
        sum2 += n * n;
    }
    const double mean = sum / trials;
    const double var = sum2 / trials - mean * mean;
    char buf[64];
    std::snprintf(buf, sizeof buf, "mean %.2f, variance %.1f", mean, var);
    report(5, "spawn counts follow the configured Poisson rate",
           std::abs(mean - 100.0) <= 3.0 && var >= 85.0 && var <= 115.0, buf);
}

void criterion_depth_coupling() {
    const ParticleConfig cfg = default_rain_config(1.0);
    const UnitDraws draws{0.5, 0.5, 0.5};
    bool ok = true;
    Particle prev;
    bool first = true;
    for (double z : {0.25, 0.5, 1.0}) {
        const Particle p = make_particle(cfg, ParticleKind::Rain, 0, 0, z, draws, 360, 0);
        if (!first)
            ok = ok && p.length < prev.length && p.thickness < prev.thickness &&
                 p.opacity < prev.opacity &&
                 std::hypot(p.ux, p.uy) < std::hypot(prev.ux, prev.uy);
        prev = p;
        first = false;
    }
    report(6, "deeper particles are smaller, fainter, and slower", ok);
}

void criterion_occlusion() {
    Frame base(64, 48, 0.3f);
    DepthMap depth(64, 48, 2.0f);
    ParticleSystem sys;
    sys.kind = ParticleKind::Snow;
    sys.config = default_snow_config(4.0);
    sys.seed = 1;
    Particle p;
    p.kind = ParticleKind::Snow;
    p.x = 32.5;
    p.y = 24.5;
    p.opacity = 0.9;
    p.thickness = 4.0;
    p.z = 3.0; // behind the scene
    sys.particles = {p};
    const bool hidden = composite(base, sys, depth).data == base.data;
    sys.particles[0].z = 1.0; // in front
    const bool visible = composite(base, sys, depth).data != base.data;
    report(7, "scene depth strictly occludes particles", hidden && visible);
}

// Direct-window SSIM oracle, implemented independently of the library path.
double ssim_oracle(const Frame& a, const Frame& b) {
    constexpr int kWin = 11, kHalf = 5;
    constexpr double kSigma = 1.5, kC1 = 0.01 * 0.01, kC2 = 0.03 * 0.03;
    double taps[kWin][kWin];
    double norm = 0.0;
    for (int i = 0; i < kWin; ++i)
        for (int j = 0; j < kWin; ++j) {
            const double dx = i - kHalf, dy = j - kHalf;
            taps[i][j] = std::exp(-(dx * dx + dy * dy) / (2 * kSigma * kSigma));
            norm += taps[i][j];
        }
    for (auto& row : taps)
        for (double& v : row)
            v /= norm;
    double total = 0.0;
    for (int c = 0; c < 3; ++c) {
        double acc = 0.0;
        long count = 0;
        for (int y = kHalf; y < a.height - kHalf; ++y)
            for (int x = kHalf; x < a.width - kHalf; ++x) {
                double mu_a = 0, mu_b = 0, aa = 0, bb = 0, ab = 0;
                for (int i = 0; i < kWin; ++i)
                    for (int j = 0; j < kWin; ++j) {
                        const double w = taps[i][j];
                        const double va = a.at(x + j - kHalf, y + i - kHalf, c);
                        const double vb = b.at(x + j - kHalf, y + i - kHalf, c);
                        mu_a += w * va;
                        mu_b += w * vb;
                        aa += w * va * va;
                        bb += w * vb * vb;
                        ab += w * va * vb;
                    }
                acc += (2 * mu_a * mu_b + kC1) * (2 * (ab - mu_a * mu_b) + kC2) /
                       ((mu_a * mu_a + mu_b * mu_b + kC1) *
                        ((aa - mu_a * mu_a) + (bb - mu_b * mu_b) + kC2));
                ++count;
            }
        total += acc / count;
    }
    return total / 3.0;
}

void criterion_metrics() {
    Frame a(32, 32, 0.5f);
    Frame b(32, 32, 0.5f + 16.0f / 255.0f);
    const bool golden = std::abs(psnr(a, b) - 24.0486) < 1e-3;
    const Frame x = textured_frame(48, 40, 90);
    Frame y = x;
    DrawStream rng(91, stream_tag("acceptance"), 2);
    for (auto& v : y.data)
        v = static_cast<float>(std::clamp(v + rng.next_uniform(-0.08, 0.08), 0.0, 1.0));
    const double lib = ssim(x, y);
    const double oracle = ssim_oracle(x, y);
    const bool self_one = std::abs(ssim(x, x) - 1.0) < 1e-9;
    const bool inf_ok = std::isinf(psnr(x, x));
    char buf[96];
    std::snprintf(buf, sizeof buf, "ssim %.8f vs oracle %.8f", lib, oracle);
    report(8, "metric goldens and independent structural-similarity oracle agree",
           golden && self_one && inf_ok && std::abs(lib - oracle) <= 1e-6, buf);
}

void criterion_profile_smoothness() {
    DrawStream rng(777, stream_tag("acceptance"), 3);
    const ProfileKind kinds[] = {ProfileKind::Trapezoid, ProfileKind::Gaussian,
                                 ProfileKind::Cosine};
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        IntensityProfile p;
        p.kind = kinds[trial % 3];
        p.t_start = rng.next_uniform(0, 50);
        p.t_end = p.t_start + rng.next_uniform(20, 200);
        p.peak = rng.next_uniform(0.1, 5.0);
        p.ramp_fraction = rng.next_uniform(0.05, 0.4);
        const double w = p.t_end - p.t_start;
        p.sigma = rng.next_uniform(w / 10.0, w / 6.0);
        const double bound = profile_delta_bound(p) * (1.0 + 1e-9);
        for (int t = -5; t < static_cast<int>(p.t_end) + 5; ++t)
            if (std::abs(eval_profile(p, t + 1) - eval_profile(p, t)) > bound)
                ok = false;
    }
    report(9, "1000 random ramp profiles respect their frame-delta bound", ok);
}

void criterion_affinity() {
    const double v = label_affinity({0, 1, 0}, {1, 1, 0});
    const bool value_ok = std::abs(v - 1.0 / std::sqrt(2.0)) <= 1e-12;

    std::vector<SegmentLabel> labels(3);
    labels[0] = {0, {0, 1, 0}};
    labels[1] = {1, {1, 1, 0}};
    labels[2] = {2, {1, 0, 0}};
    const auto sets = affinity_partition(labels, 0.7, 0.3);
    auto has = [](const std::vector<int>& v, int x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    const bool partition_ok = has(sets[0].positives, 1) && has(sets[1].positives, 0) &&
                              has(sets[0].negatives, 2) && has(sets[2].negatives, 0) &&
                              has(sets[0].positives, 0) && !has(sets[0].negatives, 1);
    report(10, "cosine label affinity and threshold partition", value_ok && partition_ok);
}

void criterion_scenario_validation() {
    const double T = 120;
    std::vector<Scenario> good(5);
    for (int i = 0; i < 5; ++i) {
        good[i].setting = i + 1;
        good[i].duration = static_cast<int>(T);
        good[i].seed = 1000 + i;
    }
    auto sched = [&](DegradationType ty, ProfileKind k, double t0, double t1, double peak) {
        DegradationSchedule s;
        s.type = ty;
        s.profile = {k, t0, t1, peak};
        s.peak_value = peak;
        return s;
    };
    good[0].schedules = {sched(DegradationType::Haze, ProfileKind::Constant, 0, T, 1.0)};
    good[1].schedules = {sched(DegradationType::Haze, ProfileKind::Cosine, 0, 60, 1.0),
                         sched(DegradationType::Rain, ProfileKind::Cosine, 60, T, 200)};
    good[2].schedules = {sched(DegradationType::Rain, ProfileKind::Trapezoid, 0, T, 200),
                         sched(DegradationType::Snow, ProfileKind::Trapezoid, 0, T, 150)};
    good[3].schedules = {sched(DegradationType::Haze, ProfileKind::Gaussian, 0, 80, 1.2),
                         sched(DegradationType::Snow, ProfileKind::Cosine, 30, T, 120)};
    good[4].schedules = {sched(DegradationType::Rain, ProfileKind::Step, 10, 50, 100)};

    bool all_good = true;
    for (const auto& s : good)
        all_good = all_good && validate_scenario(s).empty();

    bool all_bad = true;
    {
        Scenario s = good[0];
        s.schedules.push_back(sched(DegradationType::Rain, ProfileKind::Constant, 0, T, 1));
        const auto v = validate_scenario(s);
        all_bad = all_bad && !v.empty() &&
                  v[0].find("exactly one schedule") != std::string::npos;
    }
    {
        Scenario s = good[1];
        s.schedules[1].profile.t_start = 30; // overlap under a cut transition
        const auto v = validate_scenario(s);
        all_bad = all_bad && !v.empty() && v[0].find("overlap") != std::string::npos;
    }
    {
        Scenario s = good[2];
        s.schedules[1].profile.kind = ProfileKind::Cosine; // breaks the shared shape
        const auto v = validate_scenario(s);
        all_bad = all_bad && !v.empty() && v[0].find("shared profile") != std::string::npos;
    }
    {
        Scenario s = good[3];
        s.schedules.resize(1);
        const auto v = validate_scenario(s);
        all_bad = all_bad && !v.empty() && v[0].find(">= 2 schedules") != std::string::npos;
    }
    {
        Scenario s = good[4];
        s.schedules[0].peak_value = 0.0;
        const auto v = validate_scenario(s);
        all_bad = all_bad && !v.empty() && v[0].find("peak_value") != std::string::npos;
    }
    report(11, "five canned scenarios validate; corrupted variants are rejected",
           all_good && all_bad);
}

void criterion_throughput() {
    setenv("SEUD_THREADS", "1", 1);
    const int W = 640, H = 360;
    const Frame base = textured_frame(W, H, 999);
    const DepthMap depth = ramp_depth(W, H, 6.0f);
    ParticleSystem sys;
    sys.kind = ParticleKind::Rain;
    sys.config = default_rain_config(6.0);
    sys.seed = 5;
    // fill to ~5000 live particles before timing
    const double density = 5000.0 * 1e6 / (1.2 * W * 1.15 * H);
    int guard = 0;
    while (sys.particles.size() < 5000 && guard++ < 50) {
        sys.frame_index = guard;
        step_particles(sys, W, H);
        spawn(sys, density / 4.0, W, H);
    }
    const size_t live = sys.particles.size();

    const int frames = 10;
    const auto t0 = std::chrono::steady_clock::now();
    for (int t = 0; t < frames; ++t) {
        sys.frame_index = 100 + t;
        step_particles(sys, W, H);
        spawn(sys, density / 4.0, W, H);
        const Frame out = composite(base, sys, depth);
        (void)out;
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count() /
                      frames;
    unsetenv("SEUD_THREADS");
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.1f ms/frame at %zu live particles", ms, live);
    report(12, "single-threaded 640x360 compositing under 100 ms/frame",
           ms < 100.0 && live >= 5000, buf);
}

} // namespace

int main() {
    criterion_determinism();
    criterion_zero_intensity();
    criterion_haze_round_trip();
    criterion_beta_search();
    criterion_spawn_statistics();
    criterion_depth_coupling();
    criterion_occlusion();
    criterion_metrics();
    criterion_profile_smoothness();
    criterion_affinity();
    criterion_scenario_validation();
    criterion_throughput();
    if (g_failures > 0) {
        std::printf("%d criteria FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
