// Counter-based deterministic random generator.
//
// Every draw is a pure function of (seed, stream tag, frame, counter), so
// results do not depend on iteration order, thread schedule, or how many
// draws other subsystems consumed. This is what makes whole-video synthesis
// bit-reproducible.

#pragma once

#include <cstdint>
#include <cstddef>

namespace seud {

// FNV-1a, used to turn stream labels ("wind", "spawn", ...) into salts.
constexpr uint64_t fnv1a64(const char* s, std::size_t len) {
    uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= static_cast<uint8_t>(s[i]);
        h *= 1099511628211ull;
    }
    return h;
}

template <std::size_t N>
constexpr uint64_t stream_tag(const char (&str)[N]) {
    return fnv1a64(str, N - 1);
}

// splitmix64 finalizer; full-period bijective mix.
constexpr uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// One keyed draw. Chained mixing keeps the four key words from cancelling.
constexpr uint64_t counter_draw(uint64_t seed, uint64_t stream,
                                uint64_t frame, uint64_t counter) {
    uint64_t h = mix64(seed ^ 0x5851f42d4c957f2dull);
    h = mix64(h ^ stream);
    h = mix64(h ^ frame);
    h = mix64(h ^ counter);
    return h;
}

// Uniform double in [0, 1) with 53 random bits.
constexpr double u01(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Convenience cursor over one (seed, stream, frame) draw sequence.
class DrawStream {
public:
    DrawStream(uint64_t seed, uint64_t stream, uint64_t frame)
        : seed_(seed), stream_(stream), frame_(frame) {}

    uint64_t next_u64() { return counter_draw(seed_, stream_, frame_, counter_++); }
    double next_u01() { return u01(next_u64()); }

    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_u01();
    }

    // Box-Muller, one value per call (the pair's second half is discarded
    // so the draw count stays predictable).
    double next_normal();

    // Exact Poisson via exponential inter-arrival sums in log space.
    int next_poisson(double mean);

private:
    uint64_t seed_;
    uint64_t stream_;
    uint64_t frame_;
    uint64_t counter_ = 0;
};

} // namespace seud
