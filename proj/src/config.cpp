#include "edusim/config.hpp"

#include <algorithm>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <sstream>
#include <variant>

#include "edusim/csv.hpp"

namespace edusim {

namespace {

using FieldRef = std::variant<double*, int*, bool*, unsigned long long*>;

struct Field {
    std::string path;
    FieldRef ref;
};

#define EDUSIM_FIELD(section, name) Field{#section "." #name, &p.section.name}

std::vector<Field> fields(SimulationParams& p) {
    return {
        EDUSIM_FIELD(population, world_width),
        EDUSIM_FIELD(population, world_height),
        EDUSIM_FIELD(population, n_seniors_init),
        EDUSIM_FIELD(population, n_universities),
        EDUSIM_FIELD(population, segregation),
        EDUSIM_FIELD(population, birth_rate),
        EDUSIM_FIELD(population, carrying_capacity),
        EDUSIM_FIELD(population, retirement_age),
        EDUSIM_FIELD(population, init_age_min),
        EDUSIM_FIELD(population, init_age_max),
        EDUSIM_FIELD(population, share_educated_init),
        EDUSIM_FIELD(population, constructor_share),
        EDUSIM_FIELD(population, steps_from_parent),
        EDUSIM_FIELD(population, decision_age),
        EDUSIM_FIELD(population, lives_out_share),

        EDUSIM_FIELD(network, student_reach),
        EDUSIM_FIELD(network, senior_reach_mean),
        EDUSIM_FIELD(network, senior_reach_sd),
        EDUSIM_FIELD(network, reach_floor),
        EDUSIM_FIELD(network, outlier_share),
        EDUSIM_FIELD(network, extreme_share),
        EDUSIM_FIELD(network, outlier_reach),
        EDUSIM_FIELD(network, extreme_reach),

        EDUSIM_FIELD(economics, cost_home),
        EDUSIM_FIELD(economics, cost_out),
        EDUSIM_FIELD(economics, basic_home),
        EDUSIM_FIELD(economics, basic_out),
        EDUSIM_FIELD(economics, suppl_max),
        EDUSIM_FIELD(economics, suppl_full_threshold),
        EDUSIM_FIELD(economics, suppl_zero_threshold),
        EDUSIM_FIELD(economics, work_share),
        EDUSIM_FIELD(economics, work_mean),
        EDUSIM_FIELD(economics, work_sigma_log),
        EDUSIM_FIELD(economics, loan_cap),
        EDUSIM_FIELD(economics, annual_interest),
        EDUSIM_FIELD(economics, repayment_months),
        EDUSIM_FIELD(economics, edu_high_mean),
        EDUSIM_FIELD(economics, edu_high_sd),
        EDUSIM_FIELD(economics, edu_low_mean),
        EDUSIM_FIELD(economics, edu_low_sd),
        EDUSIM_FIELD(economics, prac_high_mean),
        EDUSIM_FIELD(economics, prac_high_sd),
        EDUSIM_FIELD(economics, prac_low_mean),
        EDUSIM_FIELD(economics, prac_low_sd),
        EDUSIM_FIELD(economics, constructor_mean),
        EDUSIM_FIELD(economics, constructor_sd),
        EDUSIM_FIELD(economics, wage_floor),
        EDUSIM_FIELD(economics, high_band_share),
        EDUSIM_FIELD(economics, basic_enabled),
        EDUSIM_FIELD(economics, suppl_enabled),
        EDUSIM_FIELD(economics, premium_neutralized),

        EDUSIM_FIELD(decision, omega_economic),
        EDUSIM_FIELD(decision, kappa),
        EDUSIM_FIELD(decision, ability_mean),
        EDUSIM_FIELD(decision, ability_sd),
        EDUSIM_FIELD(decision, attempt_noise_sd),
        EDUSIM_FIELD(decision, pass_threshold),
        EDUSIM_FIELD(decision, max_attempts),
        EDUSIM_FIELD(decision, openness_mean),
        EDUSIM_FIELD(decision, openness_sd),
        EDUSIM_FIELD(decision, peer_tail),
        EDUSIM_FIELD(decision, peer_min_cohort),
        EDUSIM_FIELD(decision, invert_centrality),
        EDUSIM_FIELD(decision, premium_sentinel),

        EDUSIM_FIELD(engine, ticks),
        EDUSIM_FIELD(engine, study_duration_ticks),

        EDUSIM_FIELD(experiments, reps),
        EDUSIM_FIELD(experiments, seed),
        EDUSIM_FIELD(experiments, burn_in),
        EDUSIM_FIELD(experiments, threads),
    };
}

#undef EDUSIM_FIELD

Field find_field(SimulationParams& p, const std::string& path) {
    for (auto& f : fields(p))
        if (f.path == path) return f;
    throw ConfigError("unknown parameter '" + path + "'");
}

template <class T>
T parse_number(const std::string& path, const std::string& text) {
    T v{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
        throw ConfigError("parameter '" + path + "': cannot parse '" + text + "'");
    return v;
}

bool parse_bool(const std::string& path, std::string text) {
    std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw ConfigError("parameter '" + path + "': expected a boolean, got '" + text + "'");
}

std::string to_text(const FieldRef& ref) {
    return std::visit(
        [](auto* ptr) -> std::string {
            using T = std::remove_pointer_t<decltype(ptr)>;
            if constexpr (std::is_same_v<T, bool>) return *ptr ? "true" : "false";
            else if constexpr (std::is_same_v<T, double>) return format_number(*ptr);
            else return std::to_string(*ptr);
        },
        ref);
}

}  // namespace

std::vector<std::string> param_paths() {
    SimulationParams p;
    std::vector<std::string> out;
    for (const auto& f : fields(p)) out.push_back(f.path);
    return out;
}

void set_param(SimulationParams& params, const std::string& path, const std::string& value) {
    const Field f = find_field(params, path);
    std::visit(
        [&](auto* ptr) {
            using T = std::remove_pointer_t<decltype(ptr)>;
            if constexpr (std::is_same_v<T, bool>) *ptr = parse_bool(path, value);
            else *ptr = parse_number<T>(path, value);
        },
        f.ref);
}

std::string get_param(const SimulationParams& params, const std::string& path) {
    SimulationParams copy = params;
    return to_text(find_field(copy, path).ref);
}

SimulationParams parse_config(std::istream& in) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    SimulationParams params;
    for (const auto& [section, body] : tree) {
        if (body.empty()) {
            // an empty section and a bare top-level key look alike; only the latter carries a value
            if (!body.data().empty()) throw ConfigError("config key '" + section + "' is outside any section");
            continue;
        }
        for (const auto& [key, value] : body) set_param(params, section + "." + key, value.data());
    }
    params.validate();
    return params;
}

SimulationParams load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    return parse_config(in);
}

void write_config(std::ostream& out, const SimulationParams& params) {
    SimulationParams copy = params;
    std::string current;
    for (const auto& f : fields(copy)) {
        const auto dot = f.path.find('.');
        const std::string section = f.path.substr(0, dot);
        if (section != current) {
            if (!current.empty()) out << '\n';
            out << '[' << section << "]\n";
            current = section;
        }
        out << f.path.substr(dot + 1) << " = " << to_text(f.ref) << '\n';
    }
}

void save_config(const std::filesystem::path& path, const SimulationParams& params) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    write_config(out, params);
}

}  // namespace edusim
