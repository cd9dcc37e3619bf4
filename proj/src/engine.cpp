#include "edusim/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "edusim/decision.hpp"
#include "edusim/network.hpp"
#include "edusim/population.hpp"

namespace edusim {

Simulation::Simulation(const SimulationParams& params, std::uint64_t seed) : params_(params), rng_(seed) {
    pop_ = init_world(params_, rng_);
}

void Simulation::to_practical_senior(const Student& s) {
    pop_.seniors.push_back(make_senior(s.id, s.age, Education::practical, params_, rng_));
}

void Simulation::graduate(const Student& s) {
    pop_.seniors.push_back(make_senior(s.id, s.age, Education::educated, params_, rng_));
}

namespace {

struct Decider {
    std::size_t index;
    Budget budget;
    double ratio = 1.0;
    bool has_classmates = false;
};

double average(double sum, int n) { return n > 0 ? sum / n : 0.0; }

}  // namespace

TickReport Simulation::step() {
    ++tick_;
    const auto& dp = params_.decision;
    const auto& econ = params_.economics;

    TickReport r;
    r.tick = tick_;
    r.seniors_start = static_cast<int>(pop_.seniors.size());

    // (a) exams
    std::vector<std::size_t> cohort;
    for (std::size_t i = 0; i < pop_.students.size(); ++i)
        if (pop_.students[i].state == StudentState::deciding) cohort.push_back(i);
    r.cohort_size = static_cast<int>(cohort.size());

    std::vector<std::size_t> leavers;  // students turning practical this tick
    std::vector<std::size_t> passed;
    for (std::size_t i : cohort) {
        Student& s = pop_.students[i];
        const ExamResult exam = take_exam(s.ability, dp, rng_);
        s.grade = exam.grade;
        ++s.attempts;
        if (exam.passed) {
            passed.push_back(i);
            continue;
        }
        ++r.n_exam_fail;
        if (s.attempts >= dp.max_attempts) {
            ++r.n_exam_giveups;
            leavers.push_back(i);
        }
    }

    // (b) living situation was drawn at hatch; (c) budget filter
    std::vector<Decider> deciders;
    for (std::size_t i : passed) {
        Budget b = compute_budget(pop_.students[i], econ, rng_);
        if (!b.eligible()) {
            ++r.n_budget_fail;
            leavers.push_back(i);
            continue;
        }
        deciders.push_back({i, b});
    }
    r.n_deciders = static_cast<int>(deciders.size());

    // (c) phase 1: peer ratios against everyone who sat the exam this tick
    {
        std::vector<Point> pts;
        pts.reserve(cohort.size());
        for (std::size_t i : cohort) pts.push_back(pop_.students[i].position);
        const SpatialIndex class_index(pop_.world, std::move(pts));
        for (auto& d : deciders) {
            const Student& s = pop_.students[d.index];
            double sum = 0.0;
            int n = 0;
            class_index.for_each_within(s.position, s.social_reach, [&](std::size_t k) {
                if (cohort[k] == d.index) return;
                sum += pop_.students[cohort[k]].grade;
                ++n;
            });
            if (n > 0) {
                d.has_classmates = true;
                d.ratio = (sum / n) / s.grade;
            }
        }
    }
    std::vector<double> ratios;
    for (const auto& d : deciders)
        if (d.has_classmates) ratios.push_back(d.ratio);
    const PeerThresholds thresholds = PeerThresholds::from_cohort(std::move(ratios), dp);

    // (c) phase 2: expectations, preference and the enrollment draw, in id order
    std::vector<Point> senior_pts;
    senior_pts.reserve(pop_.seniors.size());
    for (const auto& sen : pop_.seniors) senior_pts.push_back(sen.position);
    const SpatialIndex senior_index(pop_.world, std::move(senior_pts));

    double loan_sum_firstgen = 0.0, loan_sum_edufam = 0.0;
    for (const auto& d : deciders) {
        Student& s = pop_.students[d.index];
        (s.parent_educated ? r.n_deciders_edufam : r.n_deciders_firstgen)++;

        const auto wages = working_neighbor_wages(s, pop_, senior_index);
        const WageExpectation ye = expected_wage(wages, Education::educated, econ);
        const WageExpectation yp = expected_wage(wages, Education::practical, econ);
        r.wage_fallbacks += static_cast<int>(ye.fallback) + static_cast<int>(yp.fallback);

        const double loan = loan_take_up(d.budget, econ);
        const double repayment = repayment_cost(loan, econ, params_.engine.study_duration_ticks);
        const Premium premium = consumption_premium(ye.value, yp.value, repayment, econ, dp.premium_sentinel);
        r.dominated_premiums += static_cast<int>(premium.dominated);

        PreferenceInputs in;
        in.premium = premium.value;
        in.disposition = student_disposition(s.grade, dp.kappa);
        in.peer_influence = d.has_classmates ? peer_influence(d.ratio, thresholds) : 1.0;
        in.personality = s.openness;
        in.centrality = centrality(s.position, pop_.universities, pop_.world);

        const Decision decision = decide(in, dp, rng_);
        const bool enroll = decision.outcome == DecisionOutcome::complete_enroll;
        if (on_decision) {
            PreferenceInputs used = in;
            if (dp.invert_centrality) used.centrality = 1.0 - in.centrality;
            on_decision(s, DecisionTrace{s.id, d.budget, loan, repayment, ye.value, yp.value, premium.value,
                                         preference(used, dp.omega_economic), decision.probability, enroll});
        }
        if (!enroll) {
            leavers.push_back(d.index);
            continue;
        }
        s.state = StudentState::enrolled;
        s.ticks_remaining = params_.engine.study_duration_ticks;
        s.enrolled_tick = tick_;
        s.loan_monthly = loan;
        ++r.n_completers;
        if (s.parent_educated) {
            ++r.n_completers_edufam;
            loan_sum_edufam += loan;
        } else {
            ++r.n_completers_firstgen;
            loan_sum_firstgen += loan;
        }
    }
    r.avg_loan_edufam = average(loan_sum_edufam, r.n_completers_edufam);
    r.avg_loan_firstgen = average(loan_sum_firstgen, r.n_completers_firstgen);

    std::sort(leavers.begin(), leavers.end());
    for (std::size_t i : leavers) {
        to_practical_senior(pop_.students[i]);
        pop_.students[i].state = StudentState::done;
    }
    r.to_practical = static_cast<int>(leavers.size());

    // (d) studies progress; this tick's enrollees start counting next tick
    for (auto& s : pop_.students) {
        if (s.state != StudentState::enrolled || s.enrolled_tick >= tick_) continue;
        if (--s.ticks_remaining == 0) {
            graduate(s);
            s.state = StudentState::done;
            ++r.graduations;
        }
    }
    std::erase_if(pop_.students, [](const Student& s) { return s.state == StudentState::done; });

    // (e) hatching
    auto born = hatch_students(pop_, params_, rng_);
    r.births = static_cast<int>(born.size());

    // (f) aging; newborn students already carry the decision age
    for (auto& sen : pop_.seniors) ++sen.age;
    for (auto& s : pop_.students) ++s.age;
    pop_.students.insert(pop_.students.end(), born.begin(), born.end());

    // (g) retirement and carrying capacity
    const CullCounts cull = cull_and_retire(pop_, params_, rng_);
    r.retired = cull.retired;
    r.culled = cull.culled;

    // (h) report
    r.pop_seniors = static_cast<int>(pop_.seniors.size());
    const auto educated = std::count_if(pop_.seniors.begin(), pop_.seniors.end(),
                                        [](const Senior& s) { return s.education == Education::educated; });
    r.share_educated = r.pop_seniors > 0 ? static_cast<double>(educated) / r.pop_seniors : 0.0;

    if (r.pop_seniors != r.seniors_start + r.graduations + r.to_practical - r.retired - r.culled)
        throw std::logic_error("agent conservation violated at tick " + std::to_string(tick_));
    if (r.n_completers > r.n_deciders || r.n_deciders > r.cohort_size)
        throw std::logic_error("decision counts inconsistent at tick " + std::to_string(tick_));
    return r;
}

std::vector<TickReport> run(const SimulationParams& params, std::uint64_t seed) {
    Simulation sim(params, seed);
    std::vector<TickReport> out;
    out.reserve(static_cast<std::size_t>(params.engine.ticks));
    for (int t = 0; t < params.engine.ticks; ++t) out.push_back(sim.step());
    return out;
}

std::vector<TickReport> run(const SimulationParams& params, const Scenario& scenario, std::uint64_t seed) {
    return run(scenario.apply(params), seed);
}

}  // namespace edusim
