#include "edusim/economics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edusim {

BandMoments band_moments(OccupationBand band, const EconomicsParams& econ) {
    switch (band) {
        case OccupationBand::edu_high: return {econ.edu_high_mean, econ.edu_high_sd};
        case OccupationBand::edu_low: return {econ.edu_low_mean, econ.edu_low_sd};
        case OccupationBand::prac_high: return {econ.prac_high_mean, econ.prac_high_sd};
        case OccupationBand::prac_low: return {econ.prac_low_mean, econ.prac_low_sd};
        case OccupationBand::constructor: return {econ.constructor_mean, econ.constructor_sd};
    }
    throw std::logic_error("unknown occupation band");
}

OccupationBand draw_band(Education education, const EconomicsParams& econ, double constructor_share, Rng& rng) {
    if (education == Education::educated)
        return bernoulli(rng, econ.high_band_share) ? OccupationBand::edu_high : OccupationBand::edu_low;
    if (bernoulli(rng, constructor_share)) return OccupationBand::constructor;
    return bernoulli(rng, econ.high_band_share) ? OccupationBand::prac_high : OccupationBand::prac_low;
}

double draw_wage(OccupationBand band, const EconomicsParams& econ, Rng& rng) {
    const auto [m, sd] = band_moments(band, econ);
    return normal_above(rng, m, sd, econ.wage_floor);
}

double basic_grant(bool lives_out, const EconomicsParams& econ) {
    if (!econ.basic_enabled) return 0.0;
    return lives_out ? econ.basic_out : econ.basic_home;
}

double supplementary_grant(double household_income, const EconomicsParams& econ) {
    if (!econ.suppl_enabled) return 0.0;
    const double lo = econ.suppl_full_threshold;
    const double hi = econ.suppl_zero_threshold;
    if (household_income <= lo) return econ.suppl_max;
    if (household_income >= hi) return 0.0;
    return econ.suppl_max * (hi - household_income) / (hi - lo);
}

double parental_endowment(double household_income) {
    std::size_t decile = 0;
    while (decile + 1 < kEndowmentDeciles.size()) {
        const double upper = 0.5 * (kEndowmentDeciles[decile].avg_income + kEndowmentDeciles[decile + 1].avg_income);
        if (household_income < upper) break;
        ++decile;
    }
    return kEndowmentDeciles[decile].annual_spending / 12.0;
}

LogNormal work_income_distribution(const EconomicsParams& econ) {
    const double s = econ.work_sigma_log;
    return {std::log(econ.work_mean) - 0.5 * s * s, s};
}

double work_income(const EconomicsParams& econ, Rng& rng) {
    if (!bernoulli(rng, econ.work_share)) return 0.0;
    const auto [mu, sigma] = work_income_distribution(econ);
    if (!(sigma > 0.0)) return std::exp(mu);
    return std::lognormal_distribution<double>(mu, sigma)(rng);
}

Budget compute_budget(const Student& student, const EconomicsParams& econ, Rng& rng) {
    Budget b;
    b.cost = student.lives_out ? econ.cost_out : econ.cost_home;
    b.basic_grant = basic_grant(student.lives_out, econ);
    b.suppl_grant = supplementary_grant(student.household_income, econ);
    b.endowment = parental_endowment(student.household_income);
    b.work_income = work_income(econ, rng);
    b.loan_capacity = econ.loan_cap;
    return b;
}

double loan_take_up(const Budget& budget, const EconomicsParams& econ) {
    return std::clamp(budget.cost - budget.non_loan_resources(), 0.0, econ.loan_cap);
}

double repayment_cost(double loan_monthly, const EconomicsParams& econ, int study_years) {
    if (loan_monthly < 0.0) throw std::invalid_argument("repayment_cost: negative loan");
    const double debt = loan_monthly * 12.0 * study_years;
    const double n = econ.repayment_months;
    const double r = econ.annual_interest / 12.0;
    if (r == 0.0) return debt / n;
    return debt * r / (1.0 - std::pow(1.0 + r, -n));
}

WageExpectation expected_wage(std::span<const WageObservation> observations, Education branch,
                              const EconomicsParams& econ) {
    double weighted = 0.0;
    double weights = 0.0;
    for (const auto& o : observations) {
        if (o.education != branch) continue;
        weighted += o.weight * o.wage;
        weights += o.weight;
    }
    if (weights > 0.0) return {weighted / weights, false};
    return {branch == Education::educated ? econ.edu_low_mean : econ.prac_low_mean, true};
}

Premium consumption_premium(double expected_educated, double expected_practical, double repayment,
                            const EconomicsParams& econ, double sentinel) {
    if (econ.premium_neutralized) return {0.0, false};
    if (!(expected_practical > 0.0)) throw std::invalid_argument("consumption_premium: practical wage must be > 0");
    const double educated_consumption = expected_educated - repayment;
    if (educated_consumption <= 0.0) return {sentinel, true};
    return {std::log(educated_consumption / expected_practical), false};
}

}  // namespace edusim
