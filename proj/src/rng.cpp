#include "seud/rng.hpp"

#include <cmath>

namespace seud {

double DrawStream::next_normal() {
    // Box-Muller; u1 nudged away from 0 so the log is finite.
    const double u1 = u01(next_u64());
    const double u2 = u01(next_u64());
    const double r = std::sqrt(-2.0 * std::log(u1 + 1e-300));
    return r * std::cos(2.0 * M_PI * u2);
}

int DrawStream::next_poisson(double mean) {
    if (mean <= 0.0)
        return 0;
    // Sum exponential inter-arrival times until they exceed the mean.
    // Exact for any mean; draw count is O(mean), fine for per-frame spawns.
    double acc = 0.0;
    int count = -1;
    do {
        acc += -std::log(1.0 - next_u01());
        ++count;
    } while (acc < mean);
    return count;
}

} // namespace seud
