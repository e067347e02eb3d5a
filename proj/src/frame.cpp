#include "seud/frame.hpp"
#include "seud/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace seud {

Frame::Frame(int w, int h, float fill) : width(w), height(h) {
    if (w < 1 || h < 1)
        throw std::invalid_argument("Frame dimensions must be >= 1");
    data.assign(static_cast<size_t>(w) * h * 3, fill);
}

DepthMap::DepthMap(int w, int h, float fill) : width(w), height(h) {
    if (w < 1 || h < 1)
        throw std::invalid_argument("DepthMap dimensions must be >= 1");
    data.assign(static_cast<size_t>(w) * h, fill);
}

float DepthMap::max_value() const {
    float m = 0.0f;
    for (float v : data)
        m = std::max(m, v);
    return m;
}

Frame clamp_frame(const Frame& f) {
    for (size_t i = 0; i < f.data.size(); ++i) {
        if (!std::isfinite(f.data[i]))
            throw std::invalid_argument(
                "clamp_frame: non-finite value at pixel " +
                std::to_string(i / 3) + " channel " + std::to_string(i % 3));
    }
    Frame out;
    out.width = f.width;
    out.height = f.height;
    out.data.resize(f.data.size());
    kernels::clamp01(f.data.data(), out.data.data(), f.data.size());
    return out;
}

Frame lerp_frames(const Frame& a, const Frame& b, float w) {
    if (!a.same_size(b))
        throw std::invalid_argument("lerp_frames: dimension mismatch");
    if (!(w >= 0.0f && w <= 1.0f))
        throw std::invalid_argument("lerp_frames: weight out of [0,1]");
    Frame out;
    out.width = a.width;
    out.height = a.height;
    out.data.resize(a.data.size());
    kernels::lerp(a.data.data(), b.data.data(), w, out.data.data(), a.data.size());
    return out;
}

uint8_t float_to_u8(float v) {
    const float c = std::min(std::max(v, 0.0f), 1.0f);
    // half away from zero; values are non-negative here
    return static_cast<uint8_t>(std::floor(c * 255.0f + 0.5f));
}

} // namespace seud
