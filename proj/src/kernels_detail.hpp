// Shared per-element helpers. Both the scalar backend and the SIMD tail
// loops use these, so remainders match the reference bit-for-bit.

#pragma once

#include <algorithm>

namespace seud::kernels::detail {

inline float clamp01_elem(float v) {
    return std::min(std::max(v, 0.0f), 1.0f);
}

inline float lerp_elem(float a, float b, float w) {
    return (1.0f - w) * a + w * b;
}

inline float haze_elem(float h, float t, float a) {
    return clamp01_elem(h * t + a * (1.0f - t));
}

inline float dehaze_elem(float l, float t, float a, float eps) {
    return clamp01_elem((l - a) / std::max(t, eps) + a);
}

} // namespace seud::kernels::detail
