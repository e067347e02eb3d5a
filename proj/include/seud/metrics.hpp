// Full-reference quality metrics against synthesized ground truth.

#pragma once

#include "seud/frame.hpp"

#include <vector>

namespace seud {

// 10*log10(1/MSE) over all pixels and channels, [0,1] range.
// Identical frames return +infinity.
double psnr(const Frame& a, const Frame& b);

// Mean local SSIM, 11x11 Gaussian window sigma=1.5, K1=0.01, K2=0.03,
// dynamic range 1.0, computed per channel and averaged.
double ssim(const Frame& a, const Frame& b);

struct MetricReport {
    struct Entry {
        int frame_index = 0;
        double psnr_db = 0.0; // +inf for identical frames
        double ssim = 0.0;
    };
    std::vector<Entry> per_frame;
    double mean_psnr = 0.0; // over finite-PSNR frames only
    double mean_ssim = 0.0;
    int infinite_psnr_count = 0;
};

MetricReport evaluate_video(const std::vector<Frame>& restored,
                            const std::vector<Frame>& reference);

} // namespace seud
