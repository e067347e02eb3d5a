// Analytic temporal intensity profiles, degradation schedules, the five
// scenario settings, and segment-level multi-hot labels with cosine
// affinity partitioning.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace seud {

enum class ProfileKind { Constant, Step, Trapezoid, Gaussian, Cosine };
enum class DegradationType { Haze, Rain, Snow };

const char* to_string(ProfileKind k);
const char* to_string(DegradationType t);
ProfileKind profile_kind_from_string(const std::string& s);
DegradationType degradation_type_from_string(const std::string& s);

// Value is 0 outside [t_start, t_end); peak is the maximum attained inside.
struct IntensityProfile {
    ProfileKind kind = ProfileKind::Constant;
    double t_start = 0.0;
    double t_end = 0.0;
    double peak = 1.0;
    int step_count = 3;         // step: number of equal sub-intervals
    double ramp_fraction = 0.1; // trapezoid: ramp length as fraction of window
    double sigma = 0.0;         // gaussian: 0 means window/6
};

double eval_profile(const IntensityProfile& p, double t);

// Upper bound on |v(t+1) - v(t)| for the continuous kinds
// (trapezoid / gaussian / cosine), from the analytic derivative maximum.
double profile_delta_bound(const IntensityProfile& p);

struct DegradationSchedule {
    DegradationType type = DegradationType::Haze;
    IntensityProfile profile;
    // haze: scattering coefficient per depth unit at the profile peak;
    // rain/snow: expected particles per megapixel per frame at the peak.
    double peak_value = 1.0;
};

double schedule_value(const DegradationSchedule& s, double t);

// How setting-2 type transitions join: adjacent windows (cut) or
// overlapping ramps (fade). Recorded in the manifest.
enum class TransitionStyle { Cut, Fade };

struct Scenario {
    int setting = 1; // 1..5
    int duration = 0;
    std::vector<DegradationSchedule> schedules;
    int segment_length = 12; // p frames per label segment
    uint64_t seed = 0;
    TransitionStyle transition = TransitionStyle::Cut;
};

// Multi-hot over (haze, rain, snow).
using MultiHot = std::array<int, 3>;

struct SegmentLabel {
    int segment_index = 0;
    MultiHot y{0, 0, 0};
};

// One label per ceil(T/p) segment; a type is active in a segment if its
// schedule exceeds 1% of peak_value at any frame of the segment.
std::vector<SegmentLabel> segment_labels(const Scenario& s);

// Cosine affinity in [0,1]. Both all-zero -> 1, exactly one all-zero -> 0.
double label_affinity(const MultiHot& a, const MultiHot& b);

struct AffinitySets {
    std::vector<int> positives; // a_ij >= tau_plus (self always included)
    std::vector<int> negatives; // a_ij <= tau_minus
};

std::vector<AffinitySets> affinity_partition(const std::vector<SegmentLabel>& labels,
                                             double tau_plus, double tau_minus);

// Empty list means the scenario satisfies its setting's constraints.
std::vector<std::string> validate_scenario(const Scenario& s);

} // namespace seud
