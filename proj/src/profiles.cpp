#include "seud/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seud {

const char* to_string(ProfileKind k) {
    switch (k) {
    case ProfileKind::Constant: return "constant";
    case ProfileKind::Step: return "step";
    case ProfileKind::Trapezoid: return "trapezoid";
    case ProfileKind::Gaussian: return "gaussian";
    case ProfileKind::Cosine: return "cosine";
    }
    return "?";
}

const char* to_string(DegradationType t) {
    switch (t) {
    case DegradationType::Haze: return "haze";
    case DegradationType::Rain: return "rain";
    case DegradationType::Snow: return "snow";
    }
    return "?";
}

ProfileKind profile_kind_from_string(const std::string& s) {
    if (s == "constant") return ProfileKind::Constant;
    if (s == "step") return ProfileKind::Step;
    if (s == "trapezoid") return ProfileKind::Trapezoid;
    if (s == "gaussian") return ProfileKind::Gaussian;
    if (s == "cosine") return ProfileKind::Cosine;
    throw std::invalid_argument("unknown profile kind: " + s);
}

DegradationType degradation_type_from_string(const std::string& s) {
    if (s == "haze") return DegradationType::Haze;
    if (s == "rain") return DegradationType::Rain;
    if (s == "snow") return DegradationType::Snow;
    throw std::invalid_argument("unknown degradation type: " + s);
}

double eval_profile(const IntensityProfile& p, double t) {
    const double w = p.t_end - p.t_start;
    if (w <= 0.0 || t < p.t_start || t >= p.t_end)
        return 0.0;
    const double u = t - p.t_start;
    switch (p.kind) {
    case ProfileKind::Constant:
        return p.peak;
    case ProfileKind::Step: {
        const int n = std::max(p.step_count, 1);
        const int k = std::min(static_cast<int>(u / (w / n)) + 1, n);
        return p.peak * k / n;
    }
    case ProfileKind::Trapezoid: {
        const double r = p.ramp_fraction * w;
        if (r <= 0.0)
            return p.peak;
        if (u < r)
            return p.peak * (u / r);
        if (u > w - r)
            return p.peak * ((w - u) / r);
        return p.peak;
    }
    case ProfileKind::Gaussian: {
        const double sigma = p.sigma > 0.0 ? p.sigma : w / 6.0;
        const double d = t - (p.t_start + w / 2.0);
        return p.peak * std::exp(-(d * d) / (2.0 * sigma * sigma));
    }
    case ProfileKind::Cosine:
        return p.peak * (1.0 - std::cos(2.0 * std::numbers::pi * u / w)) / 2.0;
    }
    return 0.0;
}

double profile_delta_bound(const IntensityProfile& p) {
    const double w = p.t_end - p.t_start;
    if (w <= 0.0)
        return 0.0;
    switch (p.kind) {
    case ProfileKind::Trapezoid: {
        const double r = p.ramp_fraction * w;
        return r > 0.0 ? p.peak / r : p.peak;
    }
    case ProfileKind::Gaussian: {
        const double sigma = p.sigma > 0.0 ? p.sigma : w / 6.0;
        const double deriv = p.peak * std::exp(-0.5) / sigma;
        // Truncation to the window introduces a jump of the edge value.
        const double edge = p.peak * std::exp(-(w * w / 4.0) / (2.0 * sigma * sigma));
        return std::max(deriv, edge);
    }
    case ProfileKind::Cosine:
        return p.peak * std::numbers::pi / w;
    default:
        return p.peak; // discontinuous kinds: trivial bound
    }
}

double schedule_value(const DegradationSchedule& s, double t) {
    return eval_profile(s.profile, t);
}

std::vector<SegmentLabel> segment_labels(const Scenario& s) {
    const int p = std::max(s.segment_length, 1);
    const int n_seg = (s.duration + p - 1) / p;
    std::vector<SegmentLabel> out(static_cast<size_t>(std::max(n_seg, 0)));
    for (int i = 0; i < n_seg; ++i) {
        out[i].segment_index = i;
        const int lo = i * p;
        const int hi = std::min((i + 1) * p, s.duration);
        for (const auto& sch : s.schedules) {
            const double threshold = 0.01 * sch.peak_value;
            for (int t = lo; t < hi; ++t) {
                if (schedule_value(sch, t) > threshold) {
                    out[i].y[static_cast<int>(sch.type)] = 1;
                    break;
                }
            }
        }
    }
    return out;
}

double label_affinity(const MultiHot& a, const MultiHot& b) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (int c = 0; c < 3; ++c) {
        dot += a[c] * b[c];
        na += a[c] * a[c];
        nb += b[c] * b[c];
    }
    if (na == 0.0 && nb == 0.0)
        return 1.0;
    if (na == 0.0 || nb == 0.0)
        return 0.0;
    return std::min(dot / (std::sqrt(na) * std::sqrt(nb)), 1.0);
}

std::vector<AffinitySets> affinity_partition(const std::vector<SegmentLabel>& labels,
                                             double tau_plus, double tau_minus) {
    if (!(tau_plus > tau_minus))
        throw std::invalid_argument("affinity_partition: tau_plus must exceed tau_minus");
    const int n = static_cast<int>(labels.size());
    std::vector<AffinitySets> out(labels.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double a = label_affinity(labels[i].y, labels[j].y);
            if (j == i || a >= tau_plus)
                out[i].positives.push_back(j);
            else if (a <= tau_minus)
                out[i].negatives.push_back(j);
        }
    }
    return out;
}

namespace {

std::string window_str(const IntensityProfile& p) {
    return "[" + std::to_string(p.t_start) + ", " + std::to_string(p.t_end) + ")";
}

} // namespace

std::vector<std::string> validate_scenario(const Scenario& s) {
    std::vector<std::string> v;
    if (s.setting < 1 || s.setting > 5)
        v.push_back("setting must be in 1..5, got " + std::to_string(s.setting));
    if (s.duration < 1)
        v.push_back("duration must be >= 1 frame");
    if (s.segment_length < 1)
        v.push_back("segment_length must be >= 1 frame");
    for (size_t i = 0; i < s.schedules.size(); ++i) {
        const auto& sch = s.schedules[i];
        if (!(sch.peak_value > 0.0))
            v.push_back("schedule " + std::to_string(i) + ": peak_value must be > 0");
        if (!(sch.profile.t_start < sch.profile.t_end))
            v.push_back("schedule " + std::to_string(i) + ": empty activity window " +
                        window_str(sch.profile));
    }
    if (!v.empty() || s.setting < 1 || s.setting > 5)
        return v;

    const double T = s.duration;
    auto full_duration = [&](const DegradationSchedule& sch) {
        return sch.profile.t_start <= 0.0 && sch.profile.t_end >= T;
    };

    switch (s.setting) {
    case 1:
        if (s.schedules.size() != 1)
            v.push_back("setting 1 requires exactly one schedule, got " +
                        std::to_string(s.schedules.size()));
        else if (!full_duration(s.schedules[0]))
            v.push_back("setting 1 schedule must be active over the full duration; window " +
                        window_str(s.schedules[0].profile));
        break;
    case 2: {
        if (s.schedules.size() < 2) {
            v.push_back("setting 2 requires >= 2 schedules of distinct types");
            break;
        }
        for (size_t i = 0; i < s.schedules.size(); ++i)
            for (size_t j = i + 1; j < s.schedules.size(); ++j)
                if (s.schedules[i].type == s.schedules[j].type)
                    v.push_back("setting 2 requires distinct types; schedules " +
                                std::to_string(i) + " and " + std::to_string(j) +
                                " are both " + to_string(s.schedules[i].type));
        auto sorted = s.schedules;
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            return a.profile.t_start < b.profile.t_start;
        });
        if (sorted.front().profile.t_start > 0.0 || sorted.back().profile.t_end < T)
            v.push_back("setting 2 windows must cover frames [0, " + std::to_string(s.duration) + ")");
        for (size_t i = 0; i + 1 < sorted.size(); ++i) {
            const auto& a = sorted[i].profile;
            const auto& b = sorted[i + 1].profile;
            if (s.transition == TransitionStyle::Cut && b.t_start < a.t_end)
                v.push_back("setting 2 (cut) windows overlap on [" +
                            std::to_string(b.t_start) + ", " + std::to_string(a.t_end) + ")");
            if (b.t_start > a.t_end)
                v.push_back("setting 2 windows leave a gap on [" +
                            std::to_string(a.t_end) + ", " + std::to_string(b.t_start) + ")");
        }
        break;
    }
    case 3: {
        if (s.schedules.size() < 2) {
            v.push_back("setting 3 requires >= 2 schedules");
            break;
        }
        const auto& ref = s.schedules[0].profile;
        for (size_t i = 0; i < s.schedules.size(); ++i) {
            const auto& p = s.schedules[i].profile;
            if (p.kind != ref.kind || p.t_start != ref.t_start || p.t_end != ref.t_end)
                v.push_back("setting 3 requires one shared profile shape; schedule " +
                            std::to_string(i) + " differs (" + to_string(p.kind) +
                            " " + window_str(p) + ")");
            if (!full_duration(s.schedules[i]))
                v.push_back("setting 3 schedules must be active over the full duration; "
                            "schedule " + std::to_string(i) + " window " + window_str(p));
        }
        break;
    }
    case 4:
        if (s.schedules.size() < 2)
            v.push_back("setting 4 requires >= 2 schedules with independent profiles");
        break;
    case 5:
        break; // open-world: anything goes, including quiet intervals
    }
    return v;
}

} // namespace seud
