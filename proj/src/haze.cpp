#include "seud/haze.hpp"
#include "seud/kernels.hpp"
#include "seud/threading.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace seud {

ScalarField transmission(const DepthMap& d, double beta) {
    if (beta < 0.0)
        throw std::invalid_argument("transmission: beta must be >= 0");
    ScalarField t;
    t.width = d.width;
    t.height = d.height;
    t.data.resize(d.data.size());
    const float b = static_cast<float>(beta);
    parallel_for(d.data.size(), [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i)
            t.data[i] = std::exp(-b * d.data[i]);
    });
    return t;
}

Frame apply_haze(const Frame& clean, const ScalarField& t_field, const Rgb& airlight) {
    if (clean.width != t_field.width || clean.height != t_field.height)
        throw std::invalid_argument("apply_haze: dimension mismatch");
    Frame out;
    out.width = clean.width;
    out.height = clean.height;
    out.data.resize(clean.data.size());
    parallel_for(clean.pixel_count(), [&](size_t begin, size_t end) {
        kernels::haze_composite(clean.data.data() + begin * 3,
                                t_field.data.data() + begin, airlight.data(),
                                out.data.data() + begin * 3, end - begin);
    });
    return out;
}

Rgb estimate_airlight(const Frame& frame, double percentile) {
    if (frame.data.empty())
        throw std::invalid_argument("estimate_airlight: empty frame");
    if (!(percentile > 0.0 && percentile <= 100.0))
        throw std::invalid_argument("estimate_airlight: percentile out of (0, 100]");
    const size_t n = frame.pixel_count();
    // 1-based rank ceil(p/100 * n); index n-1 reproduces the exact maximum.
    const size_t rank = std::min(
        static_cast<size_t>(std::ceil(percentile / 100.0 * static_cast<double>(n))),
        n);
    Rgb a{};
    std::vector<float> channel(n);
    for (int c = 0; c < 3; ++c) {
        for (size_t p = 0; p < n; ++p)
            channel[p] = frame.data[p * 3 + c];
        std::nth_element(channel.begin(), channel.begin() + (rank - 1), channel.end());
        a[c] = channel[rank - 1];
    }
    return a;
}

Frame dehaze(const Frame& hazy, const DepthMap& d, double beta_hat,
             const Rgb& airlight, double epsilon) {
    if (hazy.width != d.width || hazy.height != d.height)
        throw std::invalid_argument("dehaze: dimension mismatch");
    if (!(epsilon > 0.0))
        throw std::invalid_argument("dehaze: epsilon must be > 0");
    if (beta_hat < 0.0)
        throw std::invalid_argument("dehaze: beta_hat must be >= 0");
    if (beta_hat == 0.0)
        return clamp_frame(hazy); // T = 1 everywhere: bitwise identity in range
    const ScalarField t = transmission(d, beta_hat);
    Frame out;
    out.width = hazy.width;
    out.height = hazy.height;
    out.data.resize(hazy.data.size());
    parallel_for(hazy.pixel_count(), [&](size_t begin, size_t end) {
        kernels::dehaze_inverse(hazy.data.data() + begin * 3, t.data.data() + begin,
                                airlight.data(), static_cast<float>(epsilon),
                                out.data.data() + begin * 3, end - begin);
    });
    return out;
}

namespace {

constexpr int kDarkChannelRadius = 7; // 15x15 window

// Separable sliding-window min filter.
void min_filter(const std::vector<float>& src, std::vector<float>& dst,
                int w, int h, int radius) {
    std::vector<float> tmp(src.size());
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            float m = src[static_cast<size_t>(y) * w + x];
            for (int k = std::max(0, x - radius); k <= std::min(w - 1, x + radius); ++k)
                m = std::min(m, src[static_cast<size_t>(y) * w + k]);
            tmp[static_cast<size_t>(y) * w + x] = m;
        }
    }
    dst.resize(src.size());
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) {
            float m = tmp[static_cast<size_t>(y) * w + x];
            for (int k = std::max(0, y - radius); k <= std::min(h - 1, y + radius); ++k)
                m = std::min(m, tmp[static_cast<size_t>(k) * w + x]);
            dst[static_cast<size_t>(y) * w + x] = m;
        }
    }
}

} // namespace

double beta_objective(const Frame& hazy, const DepthMap& d, const Rgb& airlight,
                      double beta) {
    const size_t n = hazy.pixel_count();
    const ScalarField t = transmission(d, beta);
    // Unclamped inverse: dark patches land at zero only for the true beta,
    // staying positive when beta is low and going negative when it is high.
    std::vector<float> mins(n);
    for (size_t p = 0; p < n; ++p) {
        const float tp = std::max(t.data[p], static_cast<float>(kDefaultEpsilon));
        float mn = std::numeric_limits<float>::infinity();
        for (int c = 0; c < 3; ++c) {
            const float v = (hazy.data[p * 3 + c] - airlight[c]) / tp + airlight[c];
            mn = std::min(mn, v);
        }
        mins[p] = mn;
    }
    std::vector<float> dark;
    min_filter(mins, dark, hazy.width, hazy.height, kDarkChannelRadius);
    // Low quantile instead of the global minimum for noise robustness.
    const size_t rank = std::max<size_t>(n / 1000, 1);
    std::nth_element(dark.begin(), dark.begin() + (rank - 1), dark.end());
    return std::abs(static_cast<double>(dark[rank - 1]));
}

BetaEstimate search_beta(const Frame& hazy, const DepthMap& d, const Rgb& airlight,
                         double beta_min, double beta_max) {
    if (!(beta_min < beta_max))
        throw std::invalid_argument("search_beta: beta_min must be < beta_max");
    const auto [mn, mx] = std::minmax_element(hazy.data.begin(), hazy.data.end());
    if (*mn == *mx)
        throw std::runtime_error("search_beta: beta unidentifiable on a constant frame");

    constexpr double kInvPhi = 0.6180339887498949;
    constexpr int kIterations = 40;
    double a = beta_min, b = beta_max;
    double c = b - kInvPhi * (b - a);
    double g = a + kInvPhi * (b - a);
    double fc = beta_objective(hazy, d, airlight, c);
    double fg = beta_objective(hazy, d, airlight, g);
    for (int i = 0; i < kIterations; ++i) {
        if (fc < fg) {
            b = g;
            g = c;
            fg = fc;
            c = b - kInvPhi * (b - a);
            fc = beta_objective(hazy, d, airlight, c);
        } else {
            a = c;
            c = g;
            fc = fg;
            g = a + kInvPhi * (b - a);
            fg = beta_objective(hazy, d, airlight, g);
        }
    }
    BetaEstimate est;
    est.beta_min = beta_min;
    est.beta_max = beta_max;
    est.beta_hat = fc < fg ? c : g;
    est.residual = std::min(fc, fg);
    return est;
}

} // namespace seud
