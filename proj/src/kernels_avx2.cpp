// AVX2 kernel variants. Compiled with -mavx2 and -ffp-contract=off; every
// vector op mirrors the scalar reference op-for-op so results are bit-equal.

#if defined(__x86_64__) || defined(_M_X64)

#include "seud/kernels.hpp"
#include "kernels_detail.hpp"

#include <immintrin.h>
#include <vector>

namespace seud::kernels::avx2 {

using namespace seud::kernels::detail;

namespace {

const __m256 kZero = _mm256_setzero_ps();
const __m256 kOne = _mm256_set1_ps(1.0f);

inline __m256 clamp01_v(__m256 v) {
    return _mm256_min_ps(_mm256_max_ps(v, kZero), kOne);
}

// Airlight RGB pattern replicated across 24 lanes (8 pixels), split into
// three 8-lane vectors.
struct AirlightPattern {
    __m256 v0, v1, v2;
    explicit AirlightPattern(const float a[3])
        : v0(_mm256_setr_ps(a[0], a[1], a[2], a[0], a[1], a[2], a[0], a[1])),
          v1(_mm256_setr_ps(a[2], a[0], a[1], a[2], a[0], a[1], a[2], a[0])),
          v2(_mm256_setr_ps(a[1], a[2], a[0], a[1], a[2], a[0], a[1], a[2])) {}
};

// Per-pixel transmission expanded to one entry per channel.
thread_local std::vector<float> t3_scratch;

const float* expand_t3(const float* t, size_t n_pixels) {
    t3_scratch.resize(n_pixels * 3);
    float* t3 = t3_scratch.data();
    for (size_t p = 0; p < n_pixels; ++p) {
        t3[p * 3 + 0] = t[p];
        t3[p * 3 + 1] = t[p];
        t3[p * 3 + 2] = t[p];
    }
    return t3;
}

} // namespace

void clamp01(const float* src, float* dst, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(dst + i, clamp01_v(_mm256_loadu_ps(src + i)));
    for (; i < n; ++i)
        dst[i] = clamp01_elem(src[i]);
}

void lerp(const float* a, const float* b, float w, float* dst, size_t n) {
    const __m256 vw = _mm256_set1_ps(w);
    const __m256 vw1 = _mm256_set1_ps(1.0f - w);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 va = _mm256_loadu_ps(a + i);
        const __m256 vb = _mm256_loadu_ps(b + i);
        _mm256_storeu_ps(dst + i, _mm256_add_ps(_mm256_mul_ps(vw1, va),
                                                _mm256_mul_ps(vw, vb)));
    }
    for (; i < n; ++i)
        dst[i] = lerp_elem(a[i], b[i], w);
}

void haze_composite(const float* h, const float* t, const float a[3],
                    float* dst, size_t n_pixels) {
    const size_t n = n_pixels * 3;
    const float* t3 = expand_t3(t, n_pixels);
    const AirlightPattern ap(a);
    const __m256 av[3] = {ap.v0, ap.v1, ap.v2};
    size_t i = 0;
    for (; i + 24 <= n; i += 24) {
        for (int k = 0; k < 3; ++k) {
            const size_t o = i + static_cast<size_t>(k) * 8;
            const __m256 vh = _mm256_loadu_ps(h + o);
            const __m256 vt = _mm256_loadu_ps(t3 + o);
            const __m256 out = _mm256_add_ps(
                _mm256_mul_ps(vh, vt),
                _mm256_mul_ps(av[k], _mm256_sub_ps(kOne, vt)));
            _mm256_storeu_ps(dst + o, clamp01_v(out));
        }
    }
    for (; i < n; ++i)
        dst[i] = haze_elem(h[i], t3[i], a[i % 3]);
}

void dehaze_inverse(const float* l, const float* t, const float a[3],
                    float eps, float* dst, size_t n_pixels) {
    const size_t n = n_pixels * 3;
    const float* t3 = expand_t3(t, n_pixels);
    const AirlightPattern ap(a);
    const __m256 av[3] = {ap.v0, ap.v1, ap.v2};
    const __m256 veps = _mm256_set1_ps(eps);
    size_t i = 0;
    for (; i + 24 <= n; i += 24) {
        for (int k = 0; k < 3; ++k) {
            const size_t o = i + static_cast<size_t>(k) * 8;
            const __m256 vl = _mm256_loadu_ps(l + o);
            const __m256 vt = _mm256_max_ps(_mm256_loadu_ps(t3 + o), veps);
            const __m256 out = _mm256_add_ps(
                _mm256_div_ps(_mm256_sub_ps(vl, av[k]), vt), av[k]);
            _mm256_storeu_ps(dst + o, clamp01_v(out));
        }
    }
    for (; i < n; ++i)
        dst[i] = dehaze_elem(l[i], t3[i], a[i % 3], eps);
}

} // namespace seud::kernels::avx2

#endif // x86_64
