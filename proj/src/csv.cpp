#include "edusim/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

namespace edusim {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // no "-0"
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), res.ptr};
}

void write_ticks_header(std::ostream& out) {
    out << "run_id,tick,cohort_size,n_budget_fail,n_exam_fail,n_deciders,n_completers,n_completers_firstgen,"
           "n_completers_edufam,completion_rate,avg_loan_firstgen,avg_loan_edufam,pop_seniors,share_educated\n";
}

void write_ticks_rows(std::ostream& out, int run_id, const std::vector<TickReport>& reports) {
    for (const auto& r : reports) {
        out << run_id << ',' << r.tick << ',' << r.cohort_size << ',' << r.n_budget_fail << ',' << r.n_exam_fail
            << ',' << r.n_deciders << ',' << r.n_completers << ',' << r.n_completers_firstgen << ','
            << r.n_completers_edufam << ',' << format_number(r.completion_rate()) << ','
            << format_number(r.avg_loan_firstgen) << ',' << format_number(r.avg_loan_edufam) << ',' << r.pop_seniors
            << ',' << format_number(r.share_educated) << '\n';
    }
}

void write_summary_header(std::ostream& out) { out << "scenario,metric,mean,sd,n\n"; }

void write_summary_rows(std::ostream& out, const RunSummary& summary) {
    for (const auto& m : summary.metrics)
        out << summary.scenario << ',' << m.name << ',' << format_number(m.mean) << ',' << format_number(m.sd) << ','
            << m.n << '\n';
}

void write_sensitivity_header(std::ostream& out) { out << "parameter,value,metric,mean,sd\n"; }

void write_sensitivity_rows(std::ostream& out, const SensitivityCell& cell) {
    for (const auto& m : cell.summary.metrics)
        out << cell.parameter << ',' << format_number(cell.value) << ',' << m.name << ',' << format_number(m.mean)
            << ',' << format_number(m.sd) << '\n';
}

void write_welch_header(std::ostream& out) { out << "scenario,comparison,t,dof,p\n"; }

void write_welch_rows(std::ostream& out, const std::string& scenario, const std::vector<WelchComparison>& rows) {
    for (const auto& w : rows)
        out << scenario << ',' << w.label << ',' << format_number(w.result.t) << ',' << format_number(w.result.dof)
            << ',' << format_number(w.result.p) << '\n';
}

}  // namespace edusim
