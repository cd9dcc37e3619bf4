// Command-line front end: single runs, Monte Carlo batches, scenarios and
// one-at-a-time sweeps. Writes CSV files into --out.

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edusim/config.hpp"
#include "edusim/csv.hpp"
#include "edusim/engine.hpp"
#include "edusim/experiments.hpp"
#include "edusim/scenario.hpp"

namespace fs = std::filesystem;
using namespace edusim;

namespace {

/// Output directory problems; mapped to exit code 2 like config errors.
struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::optional<unsigned long long> seed;
    std::optional<int> ticks;
    std::optional<int> burn_in;
    std::optional<int> threads;
    std::string config;
    std::string out = "out";
    std::vector<std::string> sets;
};

SimulationParams resolve_params(const GlobalOptions& g) {
    SimulationParams p = g.config.empty() ? SimulationParams{} : load_config(g.config);
    for (const auto& kv : g.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("--set expects path=value, got '" + kv + "'");
        set_param(p, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (g.seed) p.experiments.seed = *g.seed;
    if (g.ticks) p.engine.ticks = *g.ticks;
    if (g.burn_in) p.experiments.burn_in = *g.burn_in;
    if (g.threads) p.experiments.threads = *g.threads;
    p.validate();
    return p;
}

fs::path prepare_out_dir(const std::string& dir) {
    const fs::path out(dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec || !fs::is_directory(out)) throw OutputError("cannot create output directory '" + dir + "'");
    const fs::path probe = out / ".edusim_write_probe";
    {
        std::ofstream f(probe);
        if (!f) throw OutputError("output directory '" + dir + "' is not writable");
    }
    fs::remove(probe, ec);
    return out;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw OutputError("cannot write '" + path.string() + "'");
    return f;
}

void echo_config(const fs::path& out, const SimulationParams& p) {
    auto f = open_output(out / "config.ini");
    write_config(f, p);
}

MonteCarloOptions mc_options(const SimulationParams& p, int reps) {
    if (reps < 1) throw ConfigError("--reps must be at least 1");
    MonteCarloOptions o;
    o.reps = reps;
    o.base_seed = p.experiments.seed;
    o.burn_in = p.experiments.burn_in;
    o.threads = p.experiments.threads;
    return o;
}

void write_ticks(const fs::path& out, const RunSummary& s) {
    auto f = open_output(out / "ticks.csv");
    write_ticks_header(f);
    for (std::size_t i = 0; i < s.ticks.size(); ++i) write_ticks_rows(f, static_cast<int>(i), s.ticks[i]);
}

void print_summary(const RunSummary& s) {
    std::cout << "scenario " << s.scenario << " (" << s.reps << " replications)\n";
    for (const auto& m : s.metrics) {
        const bool rate = m.name.rfind("completion", 0) == 0;
        const double scale = rate ? 100.0 : 1.0;
        std::cout << "  " << std::left << std::setw(26) << m.name << std::right << std::fixed
                  << std::setprecision(2) << std::setw(10) << m.mean * scale << "  sd " << std::setw(8)
                  << m.sd * scale << (rate ? "  (%)" : "  (eur/month)") << '\n';
    }
    std::cout.unsetf(std::ios::floatfield);
}

void print_welch(const std::vector<WelchComparison>& rows) {
    for (const auto& w : rows)
        std::cout << "  welch " << w.label << ": t = " << format_number(w.result.t)
                  << ", dof = " << format_number(w.result.dof) << ", p = " << format_number(w.result.p) << '\n';
}

int cmd_run(const GlobalOptions& g) {
    const SimulationParams p = resolve_params(g);
    const fs::path out = prepare_out_dir(g.out);
    echo_config(out, p);
    RunSummary s = summarize("baseline", {run(p, p.experiments.seed)}, p.experiments.burn_in);
    write_ticks(out, s);
    print_summary(s);
    return 0;
}

int cmd_mc(const GlobalOptions& g, int reps, const std::string& scenario_key) {
    const SimulationParams p = resolve_params(g);
    const Scenario sc = Scenario::preset(scenario_key);
    const MonteCarloOptions opts = mc_options(p, reps);
    const fs::path out = prepare_out_dir(g.out);
    echo_config(out, sc.apply(p));

    const RunSummary s = monte_carlo(p, sc, opts);
    write_ticks(out, s);
    {
        auto f = open_output(out / "summary.csv");
        write_summary_header(f);
        write_summary_rows(f, s);
    }
    const auto welch = within_comparisons(s);
    {
        auto f = open_output(out / "welch.csv");
        write_welch_header(f);
        write_welch_rows(f, s.scenario, welch);
    }
    print_summary(s);
    print_welch(welch);
    return 0;
}

int cmd_scenario(const GlobalOptions& g, const std::string& key, int reps) {
    const SimulationParams p = resolve_params(g);
    const Scenario sc = Scenario::preset(key);
    const MonteCarloOptions opts = mc_options(p, reps);
    const fs::path out = prepare_out_dir(g.out);
    echo_config(out, sc.apply(p));

    const RunSummary s = monte_carlo(p, sc, opts);
    std::optional<RunSummary> base;
    if (sc.name != "baseline") base = monte_carlo(p, Scenario::baseline(), opts);

    write_ticks(out, s);
    {
        auto f = open_output(out / "summary.csv");
        write_summary_header(f);
        write_summary_rows(f, s);
        if (base) write_summary_rows(f, *base);
    }
    auto welch = within_comparisons(s);
    if (base && opts.reps >= 2) welch.push_back(versus(*base, s));
    {
        auto f = open_output(out / "welch.csv");
        write_welch_header(f);
        write_welch_rows(f, s.scenario, welch);
    }
    print_summary(s);
    if (base) print_summary(*base);
    print_welch(welch);
    return 0;
}

int run_sweeps(const GlobalOptions& g, const std::vector<SweepSpec>& sweeps, int reps) {
    const SimulationParams p = resolve_params(g);
    for (const auto& s : sweeps) sweep_path(s.parameter);  // reject bad names before any work
    const MonteCarloOptions opts = mc_options(p, reps);
    const fs::path out = prepare_out_dir(g.out);
    echo_config(out, p);

    const auto cells = oat_sensitivity(p, sweeps, opts);
    auto f = open_output(out / "sensitivity.csv");
    write_sensitivity_header(f);
    for (const auto& c : cells) {
        write_sensitivity_rows(f, c);
        const auto& m = c.summary.metric("completion_rate");
        std::cout << "  " << c.parameter << " = " << format_number(c.value) << ": completion "
                  << format_number(m.mean) << " (sd " << format_number(m.sd) << ")\n";
    }
    return 0;
}

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw ConfigError("--values: cannot parse '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ConfigError("--values needs at least one number");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edusim: agent-based simulation of tertiary-education enrollment"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--seed", g.seed, "base seed (replication i uses seed + i)");
    app.add_option("--ticks", g.ticks, "ticks per replication");
    app.add_option("--config", g.config, "INI file with parameter overrides");
    app.add_option("--out", g.out, "output directory")->capture_default_str();
    app.add_option("--burn-in", g.burn_in, "ticks excluded from summaries");
    app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
    app.add_option("--set", g.sets, "override one parameter, e.g. --set decision.kappa=2");

    int reps = -1;
    auto reps_or_default = [&](const GlobalOptions& opts) {
        return reps >= 0 ? reps : resolve_params(opts).experiments.reps;
    };

    auto* run_cmd = app.add_subcommand("run", "single replication; writes ticks.csv");

    std::string mc_scenario = "baseline";
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo replications; writes ticks.csv, summary.csv, welch.csv");
    mc_cmd->add_option("--reps", reps, "number of replications");
    mc_cmd->add_option("--scenario", mc_scenario, "baseline, 1, 2 or 3");

    std::string scenario_key;
    auto* sc_cmd = app.add_subcommand("scenario", "policy scenario compared against the baseline");
    sc_cmd->add_option("key", scenario_key, "baseline, 1, 2 or 3")->required();
    sc_cmd->add_option("--reps", reps, "number of replications");

    std::string sweep_param, sweep_values;
    auto* sweep_cmd = app.add_subcommand("sweep", "one parameter over a list of values; writes sensitivity.csv");
    sweep_cmd->add_option("--param", sweep_param, "short name (kappa, omega, ...) or dotted path")->required();
    sweep_cmd->add_option("--values", sweep_values, "comma-separated values")->required();
    sweep_cmd->add_option("--reps", reps, "replications per value");

    auto* sens_cmd = app.add_subcommand("sensitivity", "all default one-at-a-time sweeps");
    sens_cmd->add_option("--reps", reps, "replications per value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*run_cmd) return cmd_run(g);
        if (*mc_cmd) return cmd_mc(g, reps_or_default(g), mc_scenario);
        if (*sc_cmd) return cmd_scenario(g, scenario_key, reps_or_default(g));
        if (*sweep_cmd) return run_sweeps(g, {{sweep_param, parse_values(sweep_values)}}, reps_or_default(g));
        if (*sens_cmd) return run_sweeps(g, default_sweeps(), reps_or_default(g));
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const OutputError& e) {
        std::cerr << "output error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
