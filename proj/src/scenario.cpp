#include "edusim/scenario.hpp"

#include "edusim/config.hpp"

namespace edusim {

SimulationParams Scenario::apply(SimulationParams params) const {
    for (const auto& [path, value] : overrides) set_param(params, path, value);
    params.validate();
    return params;
}

Scenario Scenario::baseline() { return {"baseline", {}}; }

Scenario Scenario::no_supplementary_grant() { return {"scenario1", {{"economics.suppl_enabled", "false"}}}; }

Scenario Scenario::no_basic_grant() { return {"scenario2", {{"economics.basic_enabled", "false"}}}; }

Scenario Scenario::neutral_premium() { return {"scenario3", {{"economics.premium_neutralized", "true"}}}; }

Scenario Scenario::preset(const std::string& key) {
    if (key == "baseline" || key == "0") return baseline();
    if (key == "1" || key == "scenario1") return no_supplementary_grant();
    if (key == "2" || key == "scenario2") return no_basic_grant();
    if (key == "3" || key == "scenario3") return neutral_premium();
    throw ConfigError("unknown scenario '" + key + "' (expected baseline, 1, 2 or 3)");
}

}  // namespace edusim
