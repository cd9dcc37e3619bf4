#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "edusim/params.hpp"

namespace edusim {

/// Every addressable parameter path, e.g. "decision.kappa".
std::vector<std::string> param_paths();

/// Sets one field from its textual value. Throws ConfigError for unknown
/// paths or unparsable values.
void set_param(SimulationParams& params, const std::string& path, const std::string& value);

std::string get_param(const SimulationParams& params, const std::string& path);

/// INI text with one section per parameter group. Missing keys keep their
/// defaults; unknown sections or keys are errors. Result is validated.
SimulationParams parse_config(std::istream& in);
SimulationParams load_config(const std::filesystem::path& path);

/// Writes every field; reading it back yields identical params.
void write_config(std::ostream& out, const SimulationParams& params);
void save_config(const std::filesystem::path& path, const SimulationParams& params);

}  // namespace edusim
