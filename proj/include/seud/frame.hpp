// Image containers: RGB frames, depth maps, scalar fields.
//
// Pixels are float32 in [0, 1], row-major, interleaved RGB. Golden-file
// tests depend on this traversal order; 8-bit conversion happens only at
// the I/O boundary (v/255 in, round-half-away-from-zero out).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace seud {

struct Frame {
    int width = 0;
    int height = 0;
    std::vector<float> data; // width*height*3, RGB interleaved

    Frame() = default;
    Frame(int w, int h, float fill = 0.0f);

    float& at(int x, int y, int c) { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
    const float& at(int x, int y, int c) const { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
    bool same_size(const Frame& o) const { return width == o.width && height == o.height; }
};

struct DepthMap {
    int width = 0;
    int height = 0;
    std::vector<float> data; // width*height, scene units, larger = farther

    DepthMap() = default;
    DepthMap(int w, int h, float fill = 0.0f);

    float& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    const float& at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }

    float max_value() const;
};

using ScalarField = DepthMap; // same layout; houses transmission / alpha buffers

// Clamps every channel to [0, 1]. Throws std::invalid_argument naming the
// first offending pixel if the input contains non-finite values.
Frame clamp_frame(const Frame& f);

// out = (1-w)*a + w*b per channel. Requires matching dimensions, w in [0,1].
Frame lerp_frames(const Frame& a, const Frame& b, float w);

// I/O boundary conversions.
inline float u8_to_float(uint8_t v) { return static_cast<float>(v) / 255.0f; }
uint8_t float_to_u8(float v); // round half away from zero, clamped

} // namespace seud
