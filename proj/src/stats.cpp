#include "edusim/stats.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace edusim {

double mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_sd(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

WelchResult welch_t(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) throw std::invalid_argument("welch_t: each sample needs at least two values");
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double va = std::pow(sample_sd(a), 2) / na;
    const double vb = std::pow(sample_sd(b), 2) / nb;
    const double diff = mean(a) - mean(b);
    const double se2 = va + vb;

    if (se2 == 0.0) {
        if (diff == 0.0) return {0.0, na + nb - 2.0, 1.0};
        return {std::copysign(std::numeric_limits<double>::infinity(), diff), na + nb - 2.0, 0.0};
    }

    const double t = diff / std::sqrt(se2);
    const double dof = se2 * se2 / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
    const boost::math::students_t_distribution<double> dist(dof);
    const double p = 2.0 * boost::math::cdf(dist, -std::abs(t));
    return {t, dof, std::min(1.0, p)};
}

}  // namespace edusim
