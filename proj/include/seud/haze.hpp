// Volumetric haze: forward synthesis (transmission + airlight compositing)
// and the inverse physics core (airlight estimate, analytic dehaze, scalar
// haze-strength search).

#pragma once

#include "seud/frame.hpp"

#include <array>

namespace seud {

using Rgb = std::array<float, 3>;

struct HazeParams {
    double beta = 0.0; // scattering coefficient per depth unit, >= 0
    Rgb airlight{1.0f, 1.0f, 1.0f};
};

struct BetaEstimate {
    double beta_hat = 0.0;
    double residual = 0.0; // search objective at beta_hat
    double beta_min = 0.0;
    double beta_max = 0.0;
};

// T(x) = exp(-beta * D(x)); values in (0, 1].
ScalarField transmission(const DepthMap& d, double beta);

// L = H*T + A*(1-T), clamped.
Frame apply_haze(const Frame& clean, const ScalarField& t_field, const Rgb& airlight);

// Per-channel value at the given percentile of the pixel distribution
// (exact rank selection; 100 = channel-wise maximum).
Rgb estimate_airlight(const Frame& frame, double percentile);

// H~ = (L - A)/max(exp(-beta_hat*D), eps) + A, clamped.
Frame dehaze(const Frame& hazy, const DepthMap& d, double beta_hat,
             const Rgb& airlight, double epsilon);

inline constexpr double kDefaultEpsilon = 0.05;
inline constexpr double kDefaultBetaMin = 0.0;
inline constexpr double kDefaultBetaMax = 3.0;
inline constexpr double kDefaultAirlightPercentile = 99.9;

// Golden-section search for the scalar haze strength. The objective is the
// magnitude of a low quantile of the min-filtered dark channel of the
// unclamped inverse: under-estimating beta leaves a positive haze residual
// in the darkest patches, over-estimating drives them negative, so the
// objective dips to zero at the true strength whenever the scene contains
// near-black content. Throws on a constant frame (beta unidentifiable).
BetaEstimate search_beta(const Frame& hazy, const DepthMap& d, const Rgb& airlight,
                         double beta_min = kDefaultBetaMin,
                         double beta_max = kDefaultBetaMax);

// Search objective, exposed for the bracket-endpoint invariant test.
double beta_objective(const Frame& hazy, const DepthMap& d, const Rgb& airlight,
                      double beta);

} // namespace seud
