#pragma once

#include <span>

namespace edusim {

double mean(std::span<const double> xs);

/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double sample_sd(std::span<const double> xs);

struct WelchResult {
    double t;
    double dof;
    double p;  // two-sided
};

/// Welch's unequal-variance two-sample t-test with the Welch-Satterthwaite
/// degrees of freedom. Both samples need at least two values
/// (std::invalid_argument otherwise). Two zero-variance samples with equal
/// means give t = 0, p = 1; with different means, t = +/-inf, p = 0.
WelchResult welch_t(std::span<const double> a, std::span<const double> b);

}  // namespace edusim
