#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "edusim/config.hpp"
#include "edusim/csv.hpp"
#include "edusim/experiments.hpp"

using namespace edusim;

namespace {

SimulationParams parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("every path round-trips through get and set") {
    const auto paths = param_paths();
    CHECK(paths.size() > 60);
    SimulationParams p;
    for (const auto& path : paths) {
        CAPTURE(path);
        const std::string v = get_param(p, path);
        SimulationParams q = p;
        set_param(q, path, v);
        CHECK(q == p);
    }
}

TEST_CASE("written config reads back identical") {
    SimulationParams p;
    p.decision.kappa = 1.2345678901234567;
    p.economics.annual_interest = 0.1 + 0.2;
    p.economics.suppl_enabled = false;
    p.population.n_universities = 25;
    p.experiments.seed = 18446744073709551615ull;
    std::ostringstream out;
    write_config(out, p);
    CHECK(parse(out.str()) == p);

    const auto dir = std::filesystem::temp_directory_path() / "edusim_cfg_test";
    std::filesystem::create_directories(dir);
    save_config(dir / "c.ini", p);
    CHECK(load_config(dir / "c.ini") == p);
    std::filesystem::remove_all(dir);
}

TEST_CASE("missing keys keep defaults") {
    CHECK(parse("") == SimulationParams{});
    const auto p = parse("[decision]\nkappa = 2\n\n[engine]\n");
    CHECK(p.decision.kappa == 2.0);
    CHECK(p.decision.omega_economic == 0.75);
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse("[decision]\nkapa = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse("[nowhere]\nkappa = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse("kappa = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse("[decision]\nkappa = two\n"), ConfigError);
    CHECK_THROWS_AS(parse("[decision]\nkappa = 2x\n"), ConfigError);
    CHECK_THROWS_AS(parse("[population]\nn_universities = 2.5\n"), ConfigError);
    CHECK_THROWS_AS(parse("[population]\nsegregation = 1.5\n"), ConfigError);
    CHECK_THROWS_AS(parse("[population]\nn_universities = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse("[economics]\nsuppl_enabled = maybe\n"), ConfigError);
    CHECK_THROWS_AS(parse("[decision\nkappa = 2\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/dir/config.ini"), ConfigError);

    SimulationParams p;
    CHECK_THROWS_AS(set_param(p, "decision.nope", "1"), ConfigError);
    set_param(p, "economics.basic_enabled", "off");
    CHECK_FALSE(p.economics.basic_enabled);
    set_param(p, "economics.basic_enabled", "YES");
    CHECK(p.economics.basic_enabled);
}

TEST_CASE("number formatting") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1234567.0) == "1234567");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(0.74) == "0.74");
    CHECK(format_number(1e-7) == "1e-07");
    CHECK(format_number(std::nan("")) == "nan");
    double x = 0.1 + 0.2;
    CHECK(std::stod(format_number(x)) == x);
}

TEST_CASE("ticks csv") {
    SimulationParams p;
    p.engine.ticks = 12;
    const auto reports = run(p, 3);
    std::ostringstream out;
    write_ticks_header(out);
    write_ticks_rows(out, 0, reports);
    write_ticks_rows(out, 1, reports);
    const std::string s = out.str();
    CHECK(s.rfind("run_id,tick,cohort_size,n_budget_fail,n_exam_fail,n_deciders,n_completers,"
                  "n_completers_firstgen,n_completers_edufam,completion_rate,avg_loan_firstgen,avg_loan_edufam,"
                  "pop_seniors,share_educated\n",
                  0) == 0);
    CHECK(count_lines(s) == 1 + 2 * 12);
    CHECK(s.find('\r') == std::string::npos);
    CHECK(s.find("nan") == std::string::npos);

    std::istringstream in(s);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) CHECK(std::count(line.begin(), line.end(), ',') == 13);
}

TEST_CASE("summary and sensitivity csv") {
    SimulationParams p;
    p.engine.ticks = 8;
    MonteCarloOptions opts;
    opts.reps = 2;
    const RunSummary s = monte_carlo(p, Scenario::preset("1"), opts);
    std::ostringstream out;
    write_summary_header(out);
    write_summary_rows(out, s);
    CHECK(out.str().rfind("scenario,metric,mean,sd,n\n", 0) == 0);
    CHECK(count_lines(out.str()) == 1 + kMetricNames.size());
    CHECK(out.str().find("\nscenario1,completion_rate,") != std::string::npos);

    std::ostringstream sens;
    write_sensitivity_header(sens);
    write_sensitivity_rows(sens, SensitivityCell{"kappa", 0.5, s});
    CHECK(sens.str().rfind("parameter,value,metric,mean,sd\n", 0) == 0);
    CHECK(sens.str().find("\nkappa,0.5,completion_rate,") != std::string::npos);

    std::ostringstream welch;
    write_welch_header(welch);
    write_welch_rows(welch, "scenario1", within_comparisons(s));
    CHECK(welch.str().rfind("scenario,comparison,t,dof,p\n", 0) == 0);
}
