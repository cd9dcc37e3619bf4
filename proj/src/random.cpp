#include "edusim/random.hpp"

#include <algorithm>
#include <cmath>

namespace edusim {

namespace {
constexpr int kMaxRejections = 10000;
}

double normal_above(Rng& rng, double mean, double sd, double floor) {
    if (!(sd > 0.0)) return std::max(mean, std::nextafter(floor, floor + 1.0));
    for (int i = 0; i < kMaxRejections; ++i) {
        const double v = normal(rng, mean, sd);
        if (v > floor) return v;
    }
    return std::nextafter(floor, floor + 1.0);
}

double normal_between(Rng& rng, double mean, double sd, double lo, double hi) {
    if (!(sd > 0.0)) return std::clamp(mean, std::nextafter(lo, hi), std::nextafter(hi, lo));
    for (int i = 0; i < kMaxRejections; ++i) {
        const double v = normal(rng, mean, sd);
        if (v > lo && v < hi) return v;
    }
    return std::clamp(mean, std::nextafter(lo, hi), std::nextafter(hi, lo));
}

}  // namespace edusim
