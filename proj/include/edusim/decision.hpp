#pragma once

#include <span>
#include <vector>

#include "edusim/agents.hpp"
#include "edusim/params.hpp"
#include "edusim/random.hpp"

namespace edusim {

/// Persistent ability on the 1-10 grade scale, Normal(mean, sd) clipped.
double draw_ability(const DecisionParams& dp, Rng& rng);

struct ExamResult {
    bool passed;
    double grade;
};

/// One attempt: grade = clip(ability + noise, 1, 10), pass at the threshold.
ExamResult take_exam(double ability, const DecisionParams& dp, Rng& rng);

/// SD = (grade / 10)^kappa
double student_disposition(double grade, double kappa);

/// Linear-interpolated order statistic of `sorted` at quantile q in [0, 1].
double percentile(std::span<const double> sorted, double q);

/// Pass-through band for peer ratios. Inactive for cohorts too small to have
/// meaningful tails, in which case every ratio passes through.
struct PeerThresholds {
    double low = 0.0;
    double high = 0.0;
    bool active = false;

    static PeerThresholds from_cohort(std::vector<double> ratios, const DecisionParams& dp);
};

/// ratio = class mean / own grade; ratios outside [low, high] are inverted.
double peer_influence(double ratio, const PeerThresholds& thresholds);

/// Convenience form over raw grades. No classmates gives PI = 1.
double peer_influence(std::span<const double> classmate_grades, double own_grade,
                      const PeerThresholds& thresholds);

/// Openness ~ Normal(mean, sd) truncated to (0, 1).
double draw_openness(const DecisionParams& dp, Rng& rng);

/// Mean distance to the universities over the world diagonal, in [0, 1].
double centrality(Point position, std::span<const University> universities, const WorldGrid& world);

struct PreferenceInputs {
    double premium = 0.0;
    double disposition = 0.0;     // SD
    double peer_influence = 1.0;  // PI
    double personality = 0.0;     // PER
    double centrality = 0.0;      // CEN
};

/// P = w * premium + (1 - w) * (PI * SD + PER + CEN)
double preference(const PreferenceInputs& in, double omega_economic);

/// Logistic of the preference.
double completion_probability(double preference_value);

enum class DecisionOutcome { complete_enroll, practical };

struct Decision {
    DecisionOutcome outcome;
    double probability;
};

Decision decide(const PreferenceInputs& in, const DecisionParams& dp, Rng& rng);

}  // namespace edusim
