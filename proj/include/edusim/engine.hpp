#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "edusim/agents.hpp"
#include "edusim/economics.hpp"
#include "edusim/params.hpp"
#include "edusim/random.hpp"
#include "edusim/scenario.hpp"

namespace edusim {

struct TickReport {
    int tick = 0;
    int cohort_size = 0;  // students sitting the exam this tick
    int n_budget_fail = 0;
    int n_exam_fail = 0;
    int n_deciders = 0;  // passed exam and budget
    int n_completers = 0;
    int n_completers_firstgen = 0;
    int n_completers_edufam = 0;
    double avg_loan_firstgen = 0.0;  // 0 when the group is empty
    double avg_loan_edufam = 0.0;
    int pop_seniors = 0;
    double share_educated = 0.0;

    // not part of ticks.csv
    int n_deciders_firstgen = 0;
    int n_deciders_edufam = 0;
    int n_exam_giveups = 0;
    int seniors_start = 0;
    int graduations = 0;
    int to_practical = 0;  // budget failures, exam give-ups, decided against
    int retired = 0;
    int culled = 0;
    int births = 0;
    int wage_fallbacks = 0;
    int dominated_premiums = 0;

    double completion_rate() const {
        return n_deciders > 0 ? static_cast<double>(n_completers) / n_deciders : 0.0;
    }

    bool operator==(const TickReport&) const = default;
};

/// Per-decider values recorded before the enrollment draw.
struct DecisionTrace {
    AgentId student_id;
    Budget budget;
    double loan_monthly;
    double repayment;
    double expected_educated;
    double expected_practical;
    double premium;
    double preference;
    double probability;
    bool enrolled;
};

/// One replication. Owns its population and random stream.
class Simulation {
public:
    Simulation(const SimulationParams& params, std::uint64_t seed);

    /// Advances one tick in the fixed order: exams, budgets and decisions,
    /// graduations, hatching, aging, culling, report.
    TickReport step();

    const Population& population() const { return pop_; }
    const SimulationParams& params() const { return params_; }
    int tick() const { return tick_; }

    /// Called for every decider before the enrollment draw.
    std::function<void(const Student&, const DecisionTrace&)> on_decision;

private:
    SimulationParams params_;
    Rng rng_;
    Population pop_;
    int tick_ = 0;

    void to_practical_senior(const Student& s);
    void graduate(const Student& s);
};

std::vector<TickReport> run(const SimulationParams& params, std::uint64_t seed);
std::vector<TickReport> run(const SimulationParams& params, const Scenario& scenario, std::uint64_t seed);

}  // namespace edusim
