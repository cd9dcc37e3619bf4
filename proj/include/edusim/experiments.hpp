#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "edusim/engine.hpp"
#include "edusim/params.hpp"
#include "edusim/scenario.hpp"
#include "edusim/stats.hpp"

namespace edusim {

inline constexpr std::array<std::string_view, 5> kMetricNames{
    "completion_rate", "completion_rate_edufam", "completion_rate_firstgen", "loan_edufam", "loan_firstgen",
};

struct MetricSummary {
    std::string name;
    double mean = 0.0;  // pooled over replications x ticks
    double sd = 0.0;
    std::size_t n = 0;  // pooled tick-level values
    std::vector<double> per_rep;  // one mean per replication
};

struct RunSummary {
    std::string scenario;
    int reps = 0;
    std::vector<MetricSummary> metrics;  // kMetricNames order
    std::vector<std::vector<TickReport>> ticks;  // [rep][tick]

    const MetricSummary& metric(std::string_view name) const;
};

struct MonteCarloOptions {
    int reps = 100;
    std::uint64_t base_seed = 42;
    int burn_in = 0;
    int threads = 0;  // 0 = hardware concurrency
};

/// Replication i runs with seed base_seed + i. Ticks with an empty group
/// contribute nothing to that group's metrics.
RunSummary monte_carlo(const SimulationParams& params, const Scenario& scenario, const MonteCarloOptions& opts);

/// Pools already computed replications.
RunSummary summarize(std::string scenario, std::vector<std::vector<TickReport>> ticks, int burn_in);

struct WelchComparison {
    std::string label;
    WelchResult result;
};

/// Within-summary comparisons (edu-family vs first-gen) on per-replication means.
std::vector<WelchComparison> within_comparisons(const RunSummary& s);

/// Completion rate of `s` against `reference` on per-replication means.
WelchComparison versus(const RunSummary& reference, const RunSummary& s);

struct SweepSpec {
    std::string parameter;  // short name or dotted path
    std::vector<double> values;
};

/// Maps a short sweep name (kappa, omega, ...) to its dotted path; dotted
/// paths pass through. Throws ConfigError for unknown names.
std::string sweep_path(const std::string& parameter);

std::vector<SweepSpec> default_sweeps();

struct SensitivityCell {
    std::string parameter;
    double value;
    RunSummary summary;
};

/// One-at-a-time: each parameter varied over its values, everything else at
/// the base values. Every cell reuses the same seeds.
std::vector<SensitivityCell> oat_sensitivity(const SimulationParams& base, const std::vector<SweepSpec>& sweeps,
                                             const MonteCarloOptions& opts);

}  // namespace edusim
