#include "edusim/decision.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace edusim {

namespace {
constexpr double kGradeMin = 1.0;
constexpr double kGradeMax = 10.0;
}  // namespace

double draw_ability(const DecisionParams& dp, Rng& rng) {
    return std::clamp(normal(rng, dp.ability_mean, dp.ability_sd), kGradeMin, kGradeMax);
}

ExamResult take_exam(double ability, const DecisionParams& dp, Rng& rng) {
    const double grade = std::clamp(ability + normal(rng, 0.0, dp.attempt_noise_sd), kGradeMin, kGradeMax);
    return {grade >= dp.pass_threshold, grade};
}

double student_disposition(double grade, double kappa) { return std::pow(grade / 10.0, kappa); }

double percentile(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("percentile of an empty sample");
    const double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

PeerThresholds PeerThresholds::from_cohort(std::vector<double> ratios, const DecisionParams& dp) {
    if (ratios.size() < static_cast<std::size_t>(dp.peer_min_cohort) || ratios.empty()) return {};
    std::sort(ratios.begin(), ratios.end());
    return {percentile(ratios, dp.peer_tail), percentile(ratios, 1.0 - dp.peer_tail), true};
}

double peer_influence(double ratio, const PeerThresholds& thresholds) {
    if (!thresholds.active) return ratio;
    if (ratio >= thresholds.low && ratio <= thresholds.high) return ratio;
    return 1.0 / ratio;
}

double peer_influence(std::span<const double> classmate_grades, double own_grade, const PeerThresholds& thresholds) {
    if (classmate_grades.empty()) return 1.0;
    const double class_mean =
        std::accumulate(classmate_grades.begin(), classmate_grades.end(), 0.0) / classmate_grades.size();
    return peer_influence(class_mean / own_grade, thresholds);
}

double draw_openness(const DecisionParams& dp, Rng& rng) {
    return normal_between(rng, dp.openness_mean, dp.openness_sd, 0.0, 1.0);
}

double centrality(Point position, std::span<const University> universities, const WorldGrid& world) {
    if (universities.empty()) throw ConfigError("centrality needs at least one university");
    double total = 0.0;
    for (const auto& u : universities) total += distance(position, u.position);
    return std::clamp(total / universities.size() / world.diagonal(), 0.0, 1.0);
}

double preference(const PreferenceInputs& in, double omega_economic) {
    const double social = in.peer_influence * in.disposition + in.personality + in.centrality;
    return omega_economic * in.premium + (1.0 - omega_economic) * social;
}

double completion_probability(double p) {
    if (p >= 0.0) return 1.0 / (1.0 + std::exp(-p));
    const double e = std::exp(p);
    return e / (1.0 + e);
}

Decision decide(const PreferenceInputs& in, const DecisionParams& dp, Rng& rng) {
    PreferenceInputs used = in;
    if (dp.invert_centrality) used.centrality = 1.0 - in.centrality;
    const double prob = completion_probability(preference(used, dp.omega_economic));
    const bool enroll = uniform01(rng) < prob;
    return {enroll ? DecisionOutcome::complete_enroll : DecisionOutcome::practical, prob};
}

}  // namespace edusim
