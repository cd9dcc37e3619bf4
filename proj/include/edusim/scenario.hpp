#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edusim/params.hpp"

namespace edusim {

/// Named set of parameter overrides, each a (dotted path, value) pair.
struct Scenario {
    std::string name = "baseline";
    std::vector<std::pair<std::string, std::string>> overrides;

    SimulationParams apply(SimulationParams params) const;

    static Scenario baseline();
    static Scenario no_supplementary_grant();  // scenario1
    static Scenario no_basic_grant();          // scenario2
    static Scenario neutral_premium();         // scenario3

    /// Accepts "baseline", "1".."3" and "scenario1".."scenario3".
    static Scenario preset(const std::string& key);
};

}  // namespace edusim
