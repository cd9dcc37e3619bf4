#pragma once

#include <stdexcept>
#include <string>

namespace edusim {

/// Raised for any invalid configuration: out-of-range values, unknown keys,
/// unreadable files. The CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PopulationParams {
    double world_width = 20.0;
    double world_height = 20.0;
    int n_seniors_init = 3000;
    int n_universities = 11;
    double segregation = 0.5;
    double birth_rate = 0.05;
    int carrying_capacity = 3500;
    int retirement_age = 45;
    int init_age_min = 25;
    int init_age_max = 34;
    double share_educated_init = 0.36;
    double constructor_share = 0.036;  // among practical seniors
    double steps_from_parent = 3.0;
    int decision_age = 17;
    double lives_out_share = 0.53;

    bool operator==(const PopulationParams&) const = default;
};

struct NetworkParams {
    double student_reach = 4.5;
    double senior_reach_mean = 5.5;
    double senior_reach_sd = 1.0;
    double reach_floor = 0.5;
    double outlier_share = 0.05;
    double extreme_share = 0.01;
    double outlier_reach = 9.0;
    double extreme_reach = 14.0;

    bool operator==(const NetworkParams&) const = default;
};

struct EconomicsParams {
    double cost_home = 749.0;
    double cost_out = 1444.0;
    double basic_home = 121.33;
    double basic_out = 302.39;
    double suppl_max = 457.60;
    double suppl_full_threshold = 36592.92;
    double suppl_zero_threshold = 80000.0;
    double work_share = 0.72;
    double work_mean = 508.0;
    double work_sigma_log = 0.5;
    double loan_cap = 1054.17;
    double annual_interest = 0.0256;
    int repayment_months = 420;

    double edu_high_mean = 5246.5;
    double edu_high_sd = 1445.76;
    double edu_low_mean = 3665.71;
    double edu_low_sd = 211.11;
    double prac_high_mean = 3059.43;
    double prac_high_sd = 343.62;
    double prac_low_mean = 2514.14;
    double prac_low_sd = 184.98;
    double constructor_mean = 7350.0;
    double constructor_sd = 634.29;
    double wage_floor = 500.0;
    double high_band_share = 0.5;

    // scenario levers
    bool basic_enabled = true;
    bool suppl_enabled = true;
    bool premium_neutralized = false;

    bool operator==(const EconomicsParams&) const = default;
};

struct DecisionParams {
    double omega_economic = 0.75;  // weight of the consumption premium; the social block gets 1 - omega
    double kappa = 1.8;
    double ability_mean = 6.7;
    double ability_sd = 0.9;
    double attempt_noise_sd = 0.4;
    double pass_threshold = 5.5;
    int max_attempts = 3;
    double openness_mean = 0.5;
    double openness_sd = 0.15;
    double peer_tail = 0.10;
    int peer_min_cohort = 10;
    bool invert_centrality = false;
    double premium_sentinel = -5.0;

    bool operator==(const DecisionParams&) const = default;
};

struct EngineParams {
    int ticks = 100;
    int study_duration_ticks = 5;

    bool operator==(const EngineParams&) const = default;
};

struct ExperimentParams {
    int reps = 100;
    unsigned long long seed = 42;
    int burn_in = 0;
    int threads = 0;  // 0 = hardware concurrency

    bool operator==(const ExperimentParams&) const = default;
};

/// Every exogenous constant of the model. Each field is addressable by a
/// dotted path `section.field` (see config.hpp).
struct SimulationParams {
    PopulationParams population;
    NetworkParams network;
    EconomicsParams economics;
    DecisionParams decision;
    EngineParams engine;
    ExperimentParams experiments;

    double omega_social() const { return 1.0 - decision.omega_economic; }

    /// Throws ConfigError describing the first violated constraint.
    void validate() const;

    bool operator==(const SimulationParams&) const = default;
};

}  // namespace edusim
