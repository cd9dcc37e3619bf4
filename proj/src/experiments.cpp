#include "edusim/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "edusim/config.hpp"
#include "edusim/csv.hpp"

namespace edusim {

const MetricSummary& RunSummary::metric(std::string_view name) const {
    for (const auto& m : metrics)
        if (m.name == name) return m;
    throw std::out_of_range("no metric named " + std::string(name));
}

namespace {

/// Tick-level value of each metric, or nothing when its group is empty.
std::array<std::optional<double>, kMetricNames.size()> tick_values(const TickReport& t) {
    auto ratio = [](int num, int den) -> std::optional<double> {
        if (den <= 0) return std::nullopt;
        return static_cast<double>(num) / den;
    };
    auto loan = [](double avg, int n) -> std::optional<double> {
        if (n <= 0) return std::nullopt;
        return avg;
    };
    return {ratio(t.n_completers, t.n_deciders), ratio(t.n_completers_edufam, t.n_deciders_edufam),
            ratio(t.n_completers_firstgen, t.n_deciders_firstgen), loan(t.avg_loan_edufam, t.n_completers_edufam),
            loan(t.avg_loan_firstgen, t.n_completers_firstgen)};
}

int resolve_threads(int requested, int reps) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    return std::clamp(n, 1, std::max(1, reps));
}

}  // namespace

RunSummary summarize(std::string scenario, std::vector<std::vector<TickReport>> ticks, int burn_in) {
    RunSummary out;
    out.scenario = std::move(scenario);
    out.reps = static_cast<int>(ticks.size());

    std::array<std::vector<double>, kMetricNames.size()> pooled;
    std::array<std::vector<double>, kMetricNames.size()> per_rep;
    for (const auto& series : ticks) {
        std::array<std::vector<double>, kMetricNames.size()> rep_values;
        for (const auto& t : series) {
            if (t.tick <= burn_in) continue;
            const auto vals = tick_values(t);
            for (std::size_t m = 0; m < vals.size(); ++m)
                if (vals[m]) {
                    pooled[m].push_back(*vals[m]);
                    rep_values[m].push_back(*vals[m]);
                }
        }
        for (std::size_t m = 0; m < kMetricNames.size(); ++m)
            if (!rep_values[m].empty()) per_rep[m].push_back(mean(rep_values[m]));
    }

    for (std::size_t m = 0; m < kMetricNames.size(); ++m) {
        MetricSummary s;
        s.name = std::string(kMetricNames[m]);
        s.mean = mean(pooled[m]);
        s.sd = sample_sd(pooled[m]);
        s.n = pooled[m].size();
        s.per_rep = std::move(per_rep[m]);
        out.metrics.push_back(std::move(s));
    }
    out.ticks = std::move(ticks);
    return out;
}

RunSummary monte_carlo(const SimulationParams& params, const Scenario& scenario, const MonteCarloOptions& opts) {
    if (opts.reps < 1) throw ConfigError("monte_carlo: reps must be >= 1");
    if (opts.burn_in < 0) throw ConfigError("monte_carlo: burn-in must be >= 0");
    const SimulationParams effective = scenario.apply(params);

    std::vector<std::vector<TickReport>> results(static_cast<std::size_t>(opts.reps));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int i = next++; i < opts.reps; i = next++) {
            try {
                results[static_cast<std::size_t>(i)] = run(effective, opts.base_seed + static_cast<std::uint64_t>(i));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    const int n_threads = resolve_threads(opts.threads, opts.reps);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return summarize(scenario.name, std::move(results), opts.burn_in);
}

std::vector<WelchComparison> within_comparisons(const RunSummary& s) {
    std::vector<WelchComparison> out;
    auto compare = [&](const char* label, std::string_view a, std::string_view b) {
        const auto& ma = s.metric(a).per_rep;
        const auto& mb = s.metric(b).per_rep;
        if (ma.size() >= 2 && mb.size() >= 2) out.push_back({label, welch_t(ma, mb)});
    };
    compare("completion_rate_edufam_vs_firstgen", "completion_rate_edufam", "completion_rate_firstgen");
    compare("loan_edufam_vs_firstgen", "loan_edufam", "loan_firstgen");
    return out;
}

WelchComparison versus(const RunSummary& reference, const RunSummary& s) {
    return {"completion_rate_" + reference.scenario + "_vs_" + s.scenario,
            welch_t(reference.metric("completion_rate").per_rep, s.metric("completion_rate").per_rep)};
}

std::string sweep_path(const std::string& parameter) {
    static const std::map<std::string, std::string> aliases{
        {"steps_from_parent", "population.steps_from_parent"},
        {"n_universities", "population.n_universities"},
        {"omega", "decision.omega_economic"},
        {"weight", "decision.omega_economic"},
        {"omega_economic", "decision.omega_economic"},
        {"senior_reach_mean", "network.senior_reach_mean"},
        {"social_reach", "network.senior_reach_mean"},
        {"segregation", "population.segregation"},
        {"kappa", "decision.kappa"},
        {"birth_rate", "population.birth_rate"},
    };
    if (auto it = aliases.find(parameter); it != aliases.end()) return it->second;
    const auto paths = param_paths();
    if (std::find(paths.begin(), paths.end(), parameter) != paths.end()) return parameter;
    throw ConfigError("unknown sweep parameter '" + parameter + "'");
}

std::vector<SweepSpec> default_sweeps() {
    return {
        {"steps_from_parent", {3, 10, 15}},
        {"n_universities", {5, 11, 25}},
        {"omega", {0.25, 0.5, 0.75, 1.0}},
        {"senior_reach_mean", {1, 4, 10}},
        {"segregation", {0.25, 0.5, 0.75}},
        {"kappa", {0.5, 1.0, 1.8, 2.0}},
        {"birth_rate", {0.25, 0.5, 0.75}},
    };
}

std::vector<SensitivityCell> oat_sensitivity(const SimulationParams& base, const std::vector<SweepSpec>& sweeps,
                                             const MonteCarloOptions& opts) {
    std::vector<SensitivityCell> out;
    for (const auto& sweep : sweeps) {
        const std::string path = sweep_path(sweep.parameter);
        for (double v : sweep.values) {
            SimulationParams p = base;
            set_param(p, path, format_number(v));
            p.validate();
            out.push_back({sweep.parameter, v, monte_carlo(p, Scenario::baseline(), opts)});
        }
    }
    return out;
}

}  // namespace edusim
