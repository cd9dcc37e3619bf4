#include "doctest.h"

#include <cmath>
#include <vector>

#include "edusim/economics.hpp"
#include "oracles.hpp"

using namespace edusim;

TEST_CASE("basic grant") {
    EconomicsParams e;
    CHECK(basic_grant(false, e) == 121.33);
    CHECK(basic_grant(true, e) == 302.39);
    e.basic_enabled = false;
    CHECK(basic_grant(true, e) == 0.0);
    CHECK(basic_grant(false, e) == 0.0);
}

TEST_CASE("supplementary grant") {
    EconomicsParams e;
    CHECK(supplementary_grant(30000, e) == 457.60);
    CHECK(supplementary_grant(36592.92, e) == 457.60);
    CHECK(supplementary_grant(80000, e) == 0.0);
    CHECK(supplementary_grant(120000, e) == 0.0);

    const double mid = 58296.46;
    const double want = oracle::interpolate(36592.92, 457.60, 80000.0, 0.0, mid);
    CHECK(oracle::near_rel(want, 228.80, 1e-6));
    CHECK(oracle::near_rel(supplementary_grant(mid, e), want));

    e.suppl_enabled = false;
    CHECK(supplementary_grant(10000, e) == 0.0);
}

TEST_CASE("supplementary grant is monotone and continuous on a 1 euro grid") {
    const EconomicsParams e;
    // largest step the taper can take over 1 euro
    const double max_jump = e.suppl_max / (e.suppl_zero_threshold - e.suppl_full_threshold) + 1e-9;
    double prev = supplementary_grant(0.0, e);
    for (int income = 1; income <= 100000; ++income) {
        const double g = supplementary_grant(income, e);
        REQUIRE(g >= 0.0);
        REQUIRE(g <= prev);
        REQUIRE(prev - g <= max_jump);
        prev = g;
    }
}

TEST_CASE("parental endowment") {
    CHECK(oracle::near_rel(parental_endowment(13800), 2249.40 / 12));
    CHECK(oracle::near_rel(parental_endowment(13800), 187.45));
    CHECK(oracle::near_rel(parental_endowment(229200), 1069.60));
    CHECK(parental_endowment(52000) == doctest::Approx(225.33).epsilon(1e-4));
    CHECK(oracle::near_rel(parental_endowment(52000), 2704.0 / 12));

    // open bottom and top brackets
    CHECK(oracle::near_rel(parental_endowment(0), 2249.40 / 12));
    CHECK(oracle::near_rel(parental_endowment(1e7), 12835.20 / 12));
    // midpoint between the first two averages opens decile 2
    CHECK(oracle::near_rel(parental_endowment(19049.99), 2249.40 / 12));
    CHECK(oracle::near_rel(parental_endowment(19050.0), 1992.60 / 12));
}

TEST_CASE("work income") {
    EconomicsParams e;

    SUBCASE("no job gives zero") {
        e.work_share = 0.0;
        Rng rng(1);
        for (int i = 0; i < 100; ++i) CHECK(work_income(e, rng) == 0.0);
    }

    SUBCASE("employed draws have the configured mean") {
        e.work_share = 1.0;
        Rng rng(2);
        const int n = 100000;
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double w = work_income(e, rng);
            REQUIRE(w >= 0.0);
            sum += w;
        }
        CHECK(std::abs(sum / n - 508.0) <= 10.0);
        const auto ln = work_income_distribution(e);
        CHECK(oracle::near_rel(std::exp(ln.mu + 0.5 * ln.sigma * ln.sigma), 508.0));
        CHECK(ln.sigma == 0.5);
    }

    SUBCASE("share employed") {
        Rng rng(3);
        const int n = 100000;
        int employed = 0;
        for (int i = 0; i < n; ++i) employed += work_income(e, rng) > 0.0;
        CHECK(std::abs(employed / double(n) - 0.72) < 0.006);
    }
}

TEST_CASE("budget") {
    EconomicsParams e;
    Student s;

    SUBCASE("out-living, lowest decile, employed") {
        s.lives_out = true;
        s.household_income = 13800;
        e.work_share = 1.0;
        e.work_sigma_log = 0.0;  // every job pays exactly the mean
        Rng rng(4);
        const Budget b = compute_budget(s, e, rng);
        CHECK(oracle::near_rel(b.work_income, 508.0));
        const double want = 302.39 + 457.60 + 187.45 + 508.0 + 1054.17;
        CHECK(oracle::near_rel(b.total(), want));
        CHECK(oracle::near_rel(want, 2509.61));
        CHECK(b.cost == 1444.0);
        CHECK(b.eligible());
    }

    SUBCASE("grants off, no endowment, no work") {
        Budget b;
        b.cost = 1444.0;
        b.loan_capacity = 1054.17;
        CHECK(b.total() == 1054.17);
        CHECK_FALSE(b.eligible());
    }

    SUBCASE("home-living is always eligible in the baseline") {
        Rng rng(5);
        s.lives_out = false;
        for (int income = 0; income <= 300000; income += 997) {
            s.household_income = income;
            const Budget b = compute_budget(s, e, rng);
            CHECK(b.total() >= 1054.17 + 121.33);
            CHECK(b.eligible());
        }
    }

    SUBCASE("component-sum identity") {
        Rng rng(6);
        for (int i = 0; i < 1000; ++i) {
            s.lives_out = i % 2;
            s.household_income = uniform(rng, 0, 200000);
            const Budget b = compute_budget(s, e, rng);
            CHECK(b.total() == doctest::Approx(b.basic_grant + b.suppl_grant + b.endowment + b.work_income +
                                               b.loan_capacity));
            CHECK(b.basic_grant >= 0.0);
            CHECK(b.suppl_grant >= 0.0);
            CHECK(b.endowment >= 0.0);
            CHECK(b.work_income >= 0.0);
        }
    }
}

TEST_CASE("loan take-up") {
    const EconomicsParams e;
    Budget b;
    b.cost = 1444.0;
    b.loan_capacity = e.loan_cap;

    b.basic_grant = 1500.0;
    CHECK(loan_take_up(b, e) == 0.0);

    b.basic_grant = 1100.0;
    CHECK(oracle::near_rel(loan_take_up(b, e), 344.0));

    b.basic_grant = 0.0;
    CHECK(loan_take_up(b, e) == 1054.17);

    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        b.basic_grant = uniform(rng, 0, 2000);
        const double loan = loan_take_up(b, e);
        CHECK(loan >= 0.0);
        CHECK(loan <= e.loan_cap);
        if (b.non_loan_resources() >= b.cost) CHECK(loan == 0.0);
    }
}

TEST_CASE("repayment cost") {
    EconomicsParams e;
    CHECK(repayment_cost(0.0, e, 5) == 0.0);

    const double want = oracle::annuity_by_amortization(344.0 * 12 * 5, 0.0256, 420);
    CHECK(oracle::near_rel(repayment_cost(344.0, e, 5), want));

    e.annual_interest = 0.0;
    CHECK(oracle::near_rel(repayment_cost(344.0, e, 5), 20640.0 / 420));
    CHECK(oracle::near_rel(repayment_cost(344.0, e, 5), 49.142857142857146));

    CHECK_THROWS(repayment_cost(-1.0, e, 5));
}

TEST_CASE("repayment is increasing in loan and interest") {
    EconomicsParams e;
    double prev = 0.0;
    for (double loan = 10.0; loan <= 1054.17; loan += 10.0) {
        const double l = repayment_cost(loan, e, 5);
        CHECK(l > prev);
        prev = l;
    }
    prev = 0.0;
    for (double rate = 0.0; rate <= 0.10; rate += 0.005) {
        e.annual_interest = rate;
        const double l = repayment_cost(344.0, e, 5);
        CHECK(l > prev);
        prev = l;
    }
}

TEST_CASE("expected wage") {
    const EconomicsParams e;

    const std::vector<WageObservation> obs{{4000.0, 1.5, Education::educated}, {3000.0, 1.0, Education::educated}};
    const auto w = expected_wage(obs, Education::educated, e);
    CHECK_FALSE(w.fallback);
    CHECK(oracle::near_rel(w.value, oracle::weighted_mean({4000, 3000}, {1.5, 1.0})));
    CHECK(oracle::near_rel(w.value, 3600.0));

    const std::vector<WageObservation> one{{2750.0, 1.0, Education::practical}};
    CHECK(expected_wage(one, Education::practical, e).value == 2750.0);

    const auto fb = expected_wage(one, Education::educated, e);
    CHECK(fb.fallback);
    CHECK(fb.value == 3665.71);
    CHECK(expected_wage({}, Education::practical, e).value == 2514.14);

    SUBCASE("weighted mean stays within the contributing wages") {
        Rng rng(9);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<WageObservation> v;
            double lo = 1e18, hi = -1e18;
            const int n = uniform_int(rng, 1, 30);
            for (int i = 0; i < n; ++i) {
                const double wage = uniform(rng, 600, 9000);
                v.push_back({wage, i == 0 ? 1.0 + uniform01(rng) : 1.0, Education::practical});
                lo = std::min(lo, wage);
                hi = std::max(hi, wage);
            }
            const double x = expected_wage(v, Education::practical, e).value;
            CHECK(x >= lo - 1e-9);
            CHECK(x <= hi + 1e-9);
        }
    }
}

TEST_CASE("consumption premium") {
    EconomicsParams e;
    const double sentinel = -5.0;

    CHECK(oracle::near_rel(consumption_premium(4000, 2500, 0, e, sentinel).value, std::log(1.6)));
    CHECK(oracle::near_rel(consumption_premium(4000, 2500, 0, e, sentinel).value, 0.47000362924573563));
    CHECK(consumption_premium(3000, 2500, 500, e, sentinel).value == 0.0);

    const Premium dominated = consumption_premium(100, 2500, 100, e, sentinel);
    CHECK(dominated.dominated);
    CHECK(dominated.value == sentinel);

    CHECK_THROWS(consumption_premium(4000, 0, 0, e, sentinel));

    SUBCASE("antisymmetric in the two consumptions") {
        Rng rng(10);
        for (int i = 0; i < 500; ++i) {
            const double a = uniform(rng, 500, 9000), b = uniform(rng, 500, 9000);
            CHECK(consumption_premium(a, b, 0, e, sentinel).value ==
                  doctest::Approx(-consumption_premium(b, a, 0, e, sentinel).value));
        }
    }

    SUBCASE("common scaling leaves the premium unchanged") {
        for (double k : {0.5, 2.0, 10.0})
            CHECK(consumption_premium(k * 4000, k * 2500, k * 300, e, sentinel).value ==
                  doctest::Approx(consumption_premium(4000, 2500, 300, e, sentinel).value));
    }

    SUBCASE("neutralized premium") {
        e.premium_neutralized = true;
        CHECK(consumption_premium(9000, 1000, 0, e, sentinel).value == 0.0);
        CHECK(consumption_premium(100, 1000, 500, e, sentinel).value == 0.0);
    }
}

TEST_CASE("wage draws respect the floor") {
    EconomicsParams e;
    e.prac_low_mean = 600.0;
    e.prac_low_sd = 500.0;
    Rng rng(12);
    for (int i = 0; i < 10000; ++i) CHECK(draw_wage(OccupationBand::prac_low, e, rng) > 500.0);
}
