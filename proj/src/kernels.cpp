#include "seud/kernels.hpp"

#include <cstdlib>

namespace seud::kernels {

namespace {

struct Backend {
    void (*clamp01)(const float*, float*, size_t);
    void (*lerp)(const float*, const float*, float, float*, size_t);
    void (*haze_composite)(const float*, const float*, const float[3], float*, size_t);
    void (*dehaze_inverse)(const float*, const float*, const float[3], float, float*, size_t);
    const char* name;
};

constexpr Backend kScalar = {scalar::clamp01, scalar::lerp,
                             scalar::haze_composite, scalar::dehaze_inverse,
                             "scalar"};

Backend select_backend() {
    if (const char* env = std::getenv("SEUD_FORCE_SCALAR"); env && env[0] == '1')
        return kScalar;
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2"))
        return {avx2::clamp01, avx2::lerp, avx2::haze_composite,
                avx2::dehaze_inverse, "avx2"};
#endif
    return kScalar;
}

const Backend& backend() {
    static const Backend b = select_backend();
    return b;
}

} // namespace

void clamp01(const float* src, float* dst, size_t n) {
    backend().clamp01(src, dst, n);
}
void lerp(const float* a, const float* b, float w, float* dst, size_t n) {
    backend().lerp(a, b, w, dst, n);
}
void haze_composite(const float* h, const float* t, const float a[3],
                    float* dst, size_t n_pixels) {
    backend().haze_composite(h, t, a, dst, n_pixels);
}
void dehaze_inverse(const float* l, const float* t, const float a[3],
                    float eps, float* dst, size_t n_pixels) {
    backend().dehaze_inverse(l, t, a, eps, dst, n_pixels);
}
const char* active_backend() { return backend().name; }

} // namespace seud::kernels
