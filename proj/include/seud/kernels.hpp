// Per-pixel arithmetic kernels: scalar reference implementations plus AVX2
// variants selected at runtime. Both paths execute the same IEEE float ops
// in the same order per element (no FMA contraction), so outputs are
// bit-identical; the equivalence test enforces that.
//
// Set SEUD_FORCE_SCALAR=1 to pin the scalar path.

#pragma once

#include <cstddef>

namespace seud::kernels {

// dst[i] = min(max(src[i], 0), 1)
void clamp01(const float* src, float* dst, size_t n);

// dst[i] = (1-w)*a[i] + w*b[i]
void lerp(const float* a, const float* b, float w, float* dst, size_t n);

// Haze forward model over interleaved RGB: dst = h*t + A*(1-t), clamped.
// t has one entry per pixel, h/dst have three.
void haze_composite(const float* h, const float* t, const float a[3],
                    float* dst, size_t n_pixels);

// Haze inverse: dst = (l - A)/max(t, eps) + A, clamped.
void dehaze_inverse(const float* l, const float* t, const float a[3],
                    float eps, float* dst, size_t n_pixels);

// Name of the active backend: "avx2" or "scalar".
const char* active_backend();

namespace scalar {
void clamp01(const float* src, float* dst, size_t n);
void lerp(const float* a, const float* b, float w, float* dst, size_t n);
void haze_composite(const float* h, const float* t, const float a[3],
                    float* dst, size_t n_pixels);
void dehaze_inverse(const float* l, const float* t, const float a[3],
                    float eps, float* dst, size_t n_pixels);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void clamp01(const float* src, float* dst, size_t n);
void lerp(const float* a, const float* b, float w, float* dst, size_t n);
void haze_composite(const float* h, const float* t, const float a[3],
                    float* dst, size_t n_pixels);
void dehaze_inverse(const float* l, const float* t, const float a[3],
                    float eps, float* dst, size_t n_pixels);
} // namespace avx2
#endif

} // namespace seud::kernels
