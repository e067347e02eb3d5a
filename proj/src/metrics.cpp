#include "seud/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace seud {

double psnr(const Frame& a, const Frame& b) {
    if (!a.same_size(b))
        throw std::invalid_argument("psnr: dimension mismatch");
    double se = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        const double d = static_cast<double>(a.data[i]) - b.data[i];
        se += d * d;
    }
    if (se == 0.0)
        return std::numeric_limits<double>::infinity();
    const double mse = se / static_cast<double>(a.data.size());
    return 10.0 * std::log10(1.0 / mse);
}

namespace {

constexpr int kWin = 11;
constexpr int kHalf = kWin / 2;
constexpr double kSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01; // (K1*L)^2, L = 1
constexpr double kC2 = 0.03 * 0.03;

std::array<double, kWin> gaussian_taps() {
    std::array<double, kWin> g{};
    double sum = 0.0;
    for (int i = 0; i < kWin; ++i) {
        const double d = i - kHalf;
        g[i] = std::exp(-d * d / (2.0 * kSigma * kSigma));
        sum += g[i];
    }
    for (double& v : g)
        v /= sum;
    return g;
}

// Separable valid-region Gaussian filter; output is (w-10) x (h-10).
void filter_valid(const std::vector<double>& src, int w, int h,
                  std::vector<double>& dst) {
    static const std::array<double, kWin> g = gaussian_taps();
    const int vw = w - kWin + 1;
    const int vh = h - kWin + 1;
    std::vector<double> tmp(static_cast<size_t>(vw) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < vw; ++x) {
            double s = 0.0;
            for (int k = 0; k < kWin; ++k)
                s += g[k] * src[static_cast<size_t>(y) * w + x + k];
            tmp[static_cast<size_t>(y) * vw + x] = s;
        }
    dst.resize(static_cast<size_t>(vw) * vh);
    for (int y = 0; y < vh; ++y)
        for (int x = 0; x < vw; ++x) {
            double s = 0.0;
            for (int k = 0; k < kWin; ++k)
                s += g[k] * tmp[static_cast<size_t>(y + k) * vw + x];
            dst[static_cast<size_t>(y) * vw + x] = s;
        }
}

double ssim_channel(const std::vector<double>& pa, const std::vector<double>& pb,
                    int w, int h) {
    std::vector<double> a2(pa.size()), b2(pa.size()), ab(pa.size());
    for (size_t i = 0; i < pa.size(); ++i) {
        a2[i] = pa[i] * pa[i];
        b2[i] = pb[i] * pb[i];
        ab[i] = pa[i] * pb[i];
    }
    std::vector<double> mu_a, mu_b, m_a2, m_b2, m_ab;
    filter_valid(pa, w, h, mu_a);
    filter_valid(pb, w, h, mu_b);
    filter_valid(a2, w, h, m_a2);
    filter_valid(b2, w, h, m_b2);
    filter_valid(ab, w, h, m_ab);
    double sum = 0.0;
    for (size_t i = 0; i < mu_a.size(); ++i) {
        const double va = m_a2[i] - mu_a[i] * mu_a[i];
        const double vb = m_b2[i] - mu_b[i] * mu_b[i];
        const double cov = m_ab[i] - mu_a[i] * mu_b[i];
        const double num = (2.0 * mu_a[i] * mu_b[i] + kC1) * (2.0 * cov + kC2);
        const double den = (mu_a[i] * mu_a[i] + mu_b[i] * mu_b[i] + kC1) * (va + vb + kC2);
        sum += num / den;
    }
    return sum / static_cast<double>(mu_a.size());
}

} // namespace

double ssim(const Frame& a, const Frame& b) {
    if (!a.same_size(b))
        throw std::invalid_argument("ssim: dimension mismatch");
    if (a.width < kWin || a.height < kWin)
        throw std::invalid_argument("ssim: frame smaller than the 11x11 window");
    const size_t n = a.pixel_count();
    std::vector<double> pa(n), pb(n);
    double acc = 0.0;
    for (int c = 0; c < 3; ++c) {
        for (size_t p = 0; p < n; ++p) {
            pa[p] = a.data[p * 3 + c];
            pb[p] = b.data[p * 3 + c];
        }
        acc += ssim_channel(pa, pb, a.width, a.height);
    }
    return acc / 3.0;
}

MetricReport evaluate_video(const std::vector<Frame>& restored,
                            const std::vector<Frame>& reference) {
    if (restored.size() != reference.size())
        throw std::invalid_argument("evaluate_video: sequence length mismatch");
    if (restored.empty())
        throw std::invalid_argument("evaluate_video: empty sequences");
    MetricReport report;
    double psnr_sum = 0.0, ssim_sum = 0.0;
    int finite = 0;
    for (size_t i = 0; i < restored.size(); ++i) {
        MetricReport::Entry e;
        e.frame_index = static_cast<int>(i);
        e.psnr_db = psnr(restored[i], reference[i]);
        e.ssim = ssim(restored[i], reference[i]);
        if (std::isinf(e.psnr_db)) {
            ++report.infinite_psnr_count;
        } else {
            psnr_sum += e.psnr_db;
            ++finite;
        }
        ssim_sum += e.ssim;
        report.per_frame.push_back(e);
    }
    report.mean_psnr = finite > 0 ? psnr_sum / finite
                                  : std::numeric_limits<double>::infinity();
    report.mean_ssim = ssim_sum / static_cast<double>(restored.size());
    return report;
}

} // namespace seud
