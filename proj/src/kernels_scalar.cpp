#include "seud/kernels.hpp"
#include "kernels_detail.hpp"

namespace seud::kernels::scalar {

using namespace seud::kernels::detail;

void clamp01(const float* src, float* dst, size_t n) {
    for (size_t i = 0; i < n; ++i)
        dst[i] = clamp01_elem(src[i]);
}

void lerp(const float* a, const float* b, float w, float* dst, size_t n) {
    for (size_t i = 0; i < n; ++i)
        dst[i] = lerp_elem(a[i], b[i], w);
}

void haze_composite(const float* h, const float* t, const float a[3],
                    float* dst, size_t n_pixels) {
    for (size_t p = 0; p < n_pixels; ++p) {
        const float tp = t[p];
        for (int c = 0; c < 3; ++c)
            dst[p * 3 + c] = haze_elem(h[p * 3 + c], tp, a[c]);
    }
}

void dehaze_inverse(const float* l, const float* t, const float a[3],
                    float eps, float* dst, size_t n_pixels) {
    for (size_t p = 0; p < n_pixels; ++p) {
        const float tp = t[p];
        for (int c = 0; c < 3; ++c)
            dst[p * 3 + c] = dehaze_elem(l[p * 3 + c], tp, a[c], eps);
    }
}

} // namespace seud::kernels::scalar
