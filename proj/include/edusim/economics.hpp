#pragma once

#include <array>
#include <span>
#include <string_view>

#include "edusim/agents.hpp"
#include "edusim/params.hpp"
#include "edusim/random.hpp"

namespace edusim {

// ---- embedded calibration tables -------------------------------------------

struct ExpenseItem {
    std::string_view name;
    double monthly;
};

/// Monthly living expenses of a student living away from home.
inline constexpr std::array<ExpenseItem, 9> kOutLivingExpenses{{
    {"rent", 494.0},
    {"groceries", 201.0},
    {"study_materials", 57.0},
    {"tuition", 211.0},
    {"leisure", 144.0},
    {"clothing", 62.0},
    {"transport", 84.0},
    {"telephone", 22.0},
    {"vacation", 169.0},
}};

/// Total printed under the expense table. It disagrees with the sum of its
/// own rows (1444); the rows and cost_out agree, so cost_out is authoritative.
inline constexpr double kOutLivingExpensesPrintedTotal = 1258.0;

struct EndowmentDecile {
    double avg_income;       // euros/year
    double annual_spending;  // euros/year spent on the child's education
};

inline constexpr std::array<EndowmentDecile, 10> kEndowmentDeciles{{
    {13800.0, 2249.40},
    {24300.0, 1992.60},
    {32000.0, 2208.00},
    {41000.0, 2091.00},
    {52000.0, 2704.00},
    {65200.0, 3520.80},
    {80900.0, 4045.00},
    {99900.0, 5294.70},
    {127100.0, 7371.80},
    {229200.0, 12835.20},
}};

// ---- income bands ------------------------------------------------------------

struct BandMoments {
    double mean;
    double sd;
};

BandMoments band_moments(OccupationBand band, const EconomicsParams& econ);

/// Band for a new worker: educated -> high/low by `high_band_share`;
/// practical -> constructor with `constructor_share`, else high/low.
OccupationBand draw_band(Education education, const EconomicsParams& econ, double constructor_share, Rng& rng);

/// Normal(band mean, band sd) truncated above `wage_floor`.
double draw_wage(OccupationBand band, const EconomicsParams& econ, Rng& rng);

// ---- grants, endowment, work -----------------------------------------------

double basic_grant(bool lives_out, const EconomicsParams& econ);

/// Full amount up to the lower threshold, linear taper to zero at the upper one.
double supplementary_grant(double household_income, const EconomicsParams& econ);

/// Decile lookup; brackets are bounded by midpoints between consecutive decile
/// averages. Returns euros/month.
double parental_endowment(double household_income);

/// Log-normal parameters (mu, sigma) whose mean equals `work_mean`.
struct LogNormal {
    double mu;
    double sigma;
};
LogNormal work_income_distribution(const EconomicsParams& econ);

/// 0 with probability 1 - work_share, otherwise a log-normal draw.
double work_income(const EconomicsParams& econ, Rng& rng);

// ---- budget and loans --------------------------------------------------------

struct Budget {
    double cost = 0.0;  // E
    double basic_grant = 0.0;
    double suppl_grant = 0.0;
    double endowment = 0.0;
    double work_income = 0.0;
    double loan_capacity = 0.0;

    double non_loan_resources() const { return basic_grant + suppl_grant + endowment + work_income; }
    double total() const { return non_loan_resources() + loan_capacity; }  // X
    bool eligible() const { return total() - cost > 0.0; }
};

Budget compute_budget(const Student& student, const EconomicsParams& econ, Rng& rng);

/// Minimal borrowing: the deficit left after grants, endowment and work,
/// clamped to [0, loan_cap].
double loan_take_up(const Budget& budget, const EconomicsParams& econ);

/// Monthly annuity L repaying `loan_monthly * 12 * study_years` over
/// `repayment_months` at `annual_interest / 12` per month.
double repayment_cost(double loan_monthly, const EconomicsParams& econ, int study_years);

// ---- expectations ------------------------------------------------------------

struct WageObservation {
    double wage;
    double weight;  // nu
    Education education;
};

struct WageExpectation {
    double value;
    bool fallback;  // no observation in the branch; low-band mean used
};

WageExpectation expected_wage(std::span<const WageObservation> observations, Education branch,
                              const EconomicsParams& econ);

struct Premium {
    double value;
    bool dominated;  // Y_e - L <= 0, sentinel used
};

/// ln((Y_e - L) / Y_p); 0 when the premium is neutralized.
Premium consumption_premium(double expected_educated, double expected_practical, double repayment,
                            const EconomicsParams& econ, double sentinel);

}  // namespace edusim
