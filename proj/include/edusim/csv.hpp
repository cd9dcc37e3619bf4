#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "edusim/engine.hpp"
#include "edusim/experiments.hpp"

namespace edusim {

/// Shortest round-trip decimal, '.' separator, independent of locale.
std::string format_number(double v);

void write_ticks_header(std::ostream& out);
void write_ticks_rows(std::ostream& out, int run_id, const std::vector<TickReport>& reports);

void write_summary_header(std::ostream& out);
void write_summary_rows(std::ostream& out, const RunSummary& summary);

void write_sensitivity_header(std::ostream& out);
void write_sensitivity_rows(std::ostream& out, const SensitivityCell& cell);

void write_welch_header(std::ostream& out);
void write_welch_rows(std::ostream& out, const std::string& scenario, const std::vector<WelchComparison>& rows);

}  // namespace edusim
