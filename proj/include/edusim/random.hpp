#pragma once

#include <cstdint>
#include <random>

namespace edusim {

/// One stream per replication; all draws within a replication happen in a
/// fixed order so a seed fully determines the trajectory.
using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool bernoulli(Rng& rng, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform01(rng) < p;
}

inline double normal(Rng& rng, double mean, double sd) {
    if (!(sd > 0.0)) return mean;
    return std::normal_distribution<double>(mean, sd)(rng);
}

/// Normal draw conditioned on lying strictly above `floor` (rejection).
double normal_above(Rng& rng, double mean, double sd, double floor);

/// Normal draw conditioned on lying strictly inside (lo, hi) (rejection).
double normal_between(Rng& rng, double mean, double sd, double lo, double hi);

}  // namespace edusim
