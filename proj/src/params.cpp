#include "edusim/params.hpp"

#include <cmath>
#include <sstream>

namespace edusim {

namespace {

void require(bool ok, const char* path, const char* what) {
    if (!ok) {
        std::ostringstream msg;
        msg << "invalid parameter " << path << ": " << what;
        throw ConfigError(msg.str());
    }
}

bool probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }
bool positive(double v) { return std::isfinite(v) && v > 0.0; }
bool non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

void SimulationParams::validate() const {
    const auto& p = population;
    require(positive(p.world_width), "population.world_width", "must be > 0");
    require(positive(p.world_height), "population.world_height", "must be > 0");
    require(p.n_seniors_init >= 0, "population.n_seniors_init", "must be >= 0");
    require(p.n_universities >= 1, "population.n_universities", "at least one university is required");
    require(probability(p.segregation), "population.segregation", "must lie in [0,1]");
    require(probability(p.birth_rate), "population.birth_rate", "must lie in [0,1]");
    require(p.carrying_capacity >= 0, "population.carrying_capacity", "must be >= 0");
    require(p.init_age_min <= p.init_age_max, "population.init_age_min", "must not exceed init_age_max");
    require(probability(p.share_educated_init), "population.share_educated_init", "must lie in [0,1]");
    require(probability(p.constructor_share), "population.constructor_share", "must lie in [0,1]");
    require(non_negative(p.steps_from_parent), "population.steps_from_parent", "must be >= 0");
    require(probability(p.lives_out_share), "population.lives_out_share", "must lie in [0,1]");

    const auto& n = network;
    require(non_negative(n.student_reach), "network.student_reach", "must be >= 0");
    require(non_negative(n.senior_reach_sd), "network.senior_reach_sd", "must be >= 0");
    require(positive(n.reach_floor), "network.reach_floor", "must be > 0");
    require(std::isfinite(n.senior_reach_mean), "network.senior_reach_mean", "must be finite");
    require(probability(n.outlier_share), "network.outlier_share", "must lie in [0,1]");
    require(probability(n.extreme_share), "network.extreme_share", "must lie in [0,1]");
    require(n.extreme_share <= n.outlier_share, "network.extreme_share", "must not exceed outlier_share");
    require(n.outlier_share + n.extreme_share <= 1.0, "network.outlier_share", "outlier + extreme shares exceed 1");
    require(positive(n.outlier_reach), "network.outlier_reach", "must be > 0");
    require(positive(n.extreme_reach), "network.extreme_reach", "must be > 0");

    const auto& e = economics;
    require(non_negative(e.cost_home), "economics.cost_home", "must be >= 0");
    require(non_negative(e.cost_out), "economics.cost_out", "must be >= 0");
    require(non_negative(e.basic_home), "economics.basic_home", "must be >= 0");
    require(non_negative(e.basic_out), "economics.basic_out", "must be >= 0");
    require(non_negative(e.suppl_max), "economics.suppl_max", "must be >= 0");
    require(non_negative(e.suppl_full_threshold), "economics.suppl_full_threshold", "must be >= 0");
    require(e.suppl_zero_threshold > e.suppl_full_threshold, "economics.suppl_zero_threshold",
            "must exceed suppl_full_threshold");
    require(probability(e.work_share), "economics.work_share", "must lie in [0,1]");
    require(positive(e.work_mean), "economics.work_mean", "must be > 0");
    require(non_negative(e.work_sigma_log), "economics.work_sigma_log", "must be >= 0");
    require(non_negative(e.loan_cap), "economics.loan_cap", "must be >= 0");
    require(non_negative(e.annual_interest), "economics.annual_interest", "must be >= 0");
    require(e.repayment_months >= 1, "economics.repayment_months", "must be >= 1");
    for (auto [path, sd] : {std::pair{"economics.edu_high_sd", e.edu_high_sd}, {"economics.edu_low_sd", e.edu_low_sd},
                            {"economics.prac_high_sd", e.prac_high_sd}, {"economics.prac_low_sd", e.prac_low_sd},
                            {"economics.constructor_sd", e.constructor_sd}})
        require(non_negative(sd), path, "must be >= 0");
    for (auto [path, m] : {std::pair{"economics.edu_high_mean", e.edu_high_mean},
                           {"economics.edu_low_mean", e.edu_low_mean}, {"economics.prac_high_mean", e.prac_high_mean},
                           {"economics.prac_low_mean", e.prac_low_mean},
                           {"economics.constructor_mean", e.constructor_mean}})
        require(positive(m), path, "must be > 0");
    require(non_negative(e.wage_floor), "economics.wage_floor", "must be >= 0");
    require(probability(e.high_band_share), "economics.high_band_share", "must lie in [0,1]");

    const auto& d = decision;
    require(probability(d.omega_economic), "decision.omega_economic", "must lie in [0,1]");
    require(std::isfinite(d.kappa) && d.kappa > 0.0, "decision.kappa", "must be > 0");
    require(non_negative(d.ability_sd), "decision.ability_sd", "must be >= 0");
    require(non_negative(d.attempt_noise_sd), "decision.attempt_noise_sd", "must be >= 0");
    require(d.max_attempts >= 1, "decision.max_attempts", "must be >= 1");
    require(non_negative(d.openness_sd), "decision.openness_sd", "must be >= 0");
    require(d.peer_tail >= 0.0 && d.peer_tail < 0.5, "decision.peer_tail", "must lie in [0,0.5)");
    require(d.peer_min_cohort >= 1, "decision.peer_min_cohort", "must be >= 1");
    require(std::isfinite(d.premium_sentinel), "decision.premium_sentinel", "must be finite");

    require(engine.ticks >= 0, "engine.ticks", "must be >= 0");
    require(engine.study_duration_ticks >= 1, "engine.study_duration_ticks", "must be >= 1");

    require(experiments.reps >= 1, "experiments.reps", "must be >= 1");
    require(experiments.burn_in >= 0, "experiments.burn_in", "must be >= 0");
    require(experiments.threads >= 0, "experiments.threads", "must be >= 0");
}

}  // namespace edusim
