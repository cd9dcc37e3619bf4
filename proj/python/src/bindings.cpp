#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "edusim/config.hpp"
#include "edusim/engine.hpp"
#include "edusim/experiments.hpp"
#include "edusim/scenario.hpp"
#include "edusim/stats.hpp"

namespace py = pybind11;
using namespace edusim;

namespace {

py::dict report_dict(const TickReport& r) {
    py::dict d;
    d["tick"] = r.tick;
    d["cohort_size"] = r.cohort_size;
    d["n_budget_fail"] = r.n_budget_fail;
    d["n_exam_fail"] = r.n_exam_fail;
    d["n_deciders"] = r.n_deciders;
    d["n_completers"] = r.n_completers;
    d["n_completers_firstgen"] = r.n_completers_firstgen;
    d["n_completers_edufam"] = r.n_completers_edufam;
    d["completion_rate"] = r.completion_rate();
    d["avg_loan_firstgen"] = r.avg_loan_firstgen;
    d["avg_loan_edufam"] = r.avg_loan_edufam;
    d["pop_seniors"] = r.pop_seniors;
    d["share_educated"] = r.share_educated;
    d["n_deciders_firstgen"] = r.n_deciders_firstgen;
    d["n_deciders_edufam"] = r.n_deciders_edufam;
    d["graduations"] = r.graduations;
    d["births"] = r.births;
    return d;
}

py::list reports_list(const std::vector<TickReport>& reports) {
    py::list out;
    for (const auto& r : reports) out.append(report_dict(r));
    return out;
}

py::dict summary_dict(const RunSummary& s) {
    py::dict metrics;
    for (const auto& m : s.metrics) {
        py::dict d;
        d["mean"] = m.mean;
        d["sd"] = m.sd;
        d["n"] = m.n;
        d["per_rep"] = m.per_rep;
        metrics[py::str(m.name)] = d;
    }
    py::dict out;
    out["scenario"] = s.scenario;
    out["reps"] = s.reps;
    out["metrics"] = metrics;
    return out;
}

std::string as_text(const py::handle& v) {
    if (py::isinstance<py::bool_>(v)) return v.cast<bool>() ? "true" : "false";
    return py::str(v).cast<std::string>();
}

SimulationParams with_overrides(const py::dict& overrides) {
    SimulationParams p;
    for (const auto& [k, v] : overrides) set_param(p, k.cast<std::string>(), as_text(v));
    p.validate();
    return p;
}

MonteCarloOptions options(int reps, std::uint64_t seed, int burn_in, int threads) {
    MonteCarloOptions o;
    o.reps = reps;
    o.base_seed = seed;
    o.burn_in = burn_in;
    o.threads = threads;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Agent-based simulation of tertiary-education enrollment";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<SimulationParams>(m, "Params")
        .def(py::init(&with_overrides), py::arg("overrides") = py::dict())
        .def("get", [](const SimulationParams& p, const std::string& path) { return get_param(p, path); })
        .def("set",
             [](SimulationParams& p, const std::string& path, const py::object& value) {
                 set_param(p, path, as_text(value));
                 p.validate();
             })
        .def("validate", &SimulationParams::validate)
        .def("to_ini",
             [](const SimulationParams& p) {
                 std::ostringstream out;
                 write_config(out, p);
                 return out.str();
             })
        .def_static("from_ini",
                    [](const std::string& text) {
                        std::istringstream in(text);
                        return parse_config(in);
                    })
        .def_static("load", [](const std::string& path) { return load_config(path); })
        .def("save", [](const SimulationParams& p, const std::string& path) { save_config(path, p); })
        .def("__eq__", [](const SimulationParams& a, const SimulationParams& b) { return a == b; });

    m.def("param_paths", &param_paths);

    m.def(
        "run",
        [](const SimulationParams& params, std::uint64_t seed, const std::string& scenario) {
            std::vector<TickReport> reports;
            {
                py::gil_scoped_release release;
                reports = run(params, Scenario::preset(scenario), seed);
            }
            return reports_list(reports);
        },
        py::arg("params") = SimulationParams{}, py::arg("seed") = 42, py::arg("scenario") = "baseline",
        "One replication; a list of per-tick report dicts.");

    m.def(
        "monte_carlo",
        [](const SimulationParams& params, const std::string& scenario, int reps, std::uint64_t seed, int burn_in,
           int threads) {
            RunSummary s;
            {
                py::gil_scoped_release release;
                s = monte_carlo(params, Scenario::preset(scenario), options(reps, seed, burn_in, threads));
            }
            return summary_dict(s);
        },
        py::arg("params") = SimulationParams{}, py::arg("scenario") = "baseline", py::arg("reps") = 100,
        py::arg("seed") = 42, py::arg("burn_in") = 0, py::arg("threads") = 0);

    m.def(
        "oat_sensitivity",
        [](const SimulationParams& params, const std::map<std::string, std::vector<double>>& sweeps, int reps,
           std::uint64_t seed, int threads) {
            std::vector<SweepSpec> specs;
            for (const auto& [name, values] : sweeps) specs.push_back({name, values});
            std::vector<SensitivityCell> cells;
            {
                py::gil_scoped_release release;
                cells = oat_sensitivity(params, specs, options(reps, seed, 0, threads));
            }
            py::list out;
            for (const auto& c : cells) {
                py::dict d = summary_dict(c.summary);
                d["parameter"] = c.parameter;
                d["value"] = c.value;
                out.append(d);
            }
            return out;
        },
        py::arg("params"), py::arg("sweeps"), py::arg("reps") = 100, py::arg("seed") = 42, py::arg("threads") = 0);

    m.def(
        "welch_t",
        [](const std::vector<double>& a, const std::vector<double>& b) {
            const WelchResult r = welch_t(a, b);
            return py::make_tuple(r.t, r.dof, r.p);
        },
        "Welch two-sample t-test: (t, dof, two-sided p).");

    m.def("scenarios", [] { return std::vector<std::string>{"baseline", "scenario1", "scenario2", "scenario3"}; });
}
