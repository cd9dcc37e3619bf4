#include "edusim/population.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "edusim/decision.hpp"
#include "edusim/economics.hpp"
#include "edusim/network.hpp"

namespace edusim {

namespace {
constexpr int kDisplaceTries = 64;
}

Point assign_location(Education education, double segregation, const WorldGrid& world, Rng& rng) {
    const double own_side = 0.5 + 0.5 * segregation;
    const bool educated_half = bernoulli(rng, own_side) == (education == Education::educated);
    const double half = world.width / 2.0;
    const double x = educated_half ? uniform(rng, half, world.width) : uniform(rng, 0.0, half);
    const double y = uniform(rng, 0.0, world.height);
    return world.clamp({x, y});
}

Senior make_senior(AgentId id, int age, Education education, const SimulationParams& params, Rng& rng) {
    Senior s;
    s.id = id;
    s.age = age;
    s.gender = bernoulli(rng, 0.5) ? Gender::female : Gender::male;
    s.education = education;
    s.band = draw_band(education, params.economics, params.population.constructor_share, rng);
    s.wage = draw_wage(s.band, params.economics, rng);
    s.position = assign_location(education, params.population.segregation, WorldGrid{params.population.world_width,
                                                                                      params.population.world_height},
                                 rng);
    s.social_reach = assign_social_reach(ReachProfile::from(params.network), rng);
    return s;
}

Population init_world(const SimulationParams& params, Rng& rng) {
    params.validate();
    const auto& pp = params.population;

    Population pop;
    pop.world = {pp.world_width, pp.world_height};
    pop.seniors.reserve(static_cast<std::size_t>(std::max(pp.n_seniors_init, pp.carrying_capacity)));
    for (int i = 0; i < pp.n_seniors_init; ++i) {
        const AgentId id = pop.allocate_id();
        const int age = uniform_int(rng, pp.init_age_min, pp.init_age_max);
        const Education edu = bernoulli(rng, pp.share_educated_init) ? Education::educated : Education::practical;
        pop.seniors.push_back(make_senior(id, age, edu, params, rng));
    }
    for (int u = 0; u < pp.n_universities; ++u)
        pop.universities.push_back(
            {u, pop.world.clamp({uniform(rng, 0.0, pop.world.width), uniform(rng, 0.0, pop.world.height)})});

    pop.students = hatch_students(pop, params, rng);
    return pop;
}

Point displace(Point origin, double steps, const WorldGrid& world, Rng& rng) {
    if (steps <= 0.0) return origin;
    Point p = origin;
    for (int i = 0; i < kDisplaceTries; ++i) {
        const double heading = uniform(rng, 0.0, 2.0 * std::numbers::pi);
        p = {origin.x + steps * std::cos(heading), origin.y + steps * std::sin(heading)};
        if (world.contains(p)) return p;
    }
    return world.clamp(p);
}

std::vector<Student> hatch_students(Population& pop, const SimulationParams& params, Rng& rng) {
    const auto& pp = params.population;
    std::vector<Student> out;
    for (const auto& parent : pop.seniors) {
        if (!bernoulli(rng, pp.birth_rate)) continue;
        Student s;
        s.id = pop.allocate_id();
        s.age = pp.decision_age;
        s.parent_id = parent.id;
        s.parent_wage = parent.wage;
        s.parent_educated = parent.education == Education::educated;
        s.parent_weight = 1.0 + uniform01(rng);
        s.position = displace(parent.position, pp.steps_from_parent, pop.world, rng);
        s.social_reach = params.network.student_reach;
        s.ability = draw_ability(params.decision, rng);
        s.openness = draw_openness(params.decision, rng);
        s.lives_out = bernoulli(rng, pp.lives_out_share);
        s.household_income = parent.wage * 12.0;
        out.push_back(s);
    }
    return out;
}

CullCounts cull_and_retire(Population& pop, const SimulationParams& params, Rng& rng) {
    CullCounts counts;
    const int max_age = params.population.retirement_age;
    const auto before = pop.seniors.size();
    std::erase_if(pop.seniors, [max_age](const Senior& s) { return s.age > max_age; });
    counts.retired = static_cast<int>(before - pop.seniors.size());

    const auto cap = static_cast<std::size_t>(params.population.carrying_capacity);
    if (pop.seniors.size() > cap) {
        const std::size_t excess = pop.seniors.size() - cap;
        std::vector<std::size_t> idx(pop.seniors.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        // partial Fisher-Yates: the first `excess` slots are the victims
        for (std::size_t i = 0; i < excess; ++i) {
            const auto j = std::uniform_int_distribution<std::size_t>(i, idx.size() - 1)(rng);
            std::swap(idx[i], idx[j]);
        }
        std::vector<char> doomed(pop.seniors.size(), 0);
        for (std::size_t i = 0; i < excess; ++i) doomed[idx[i]] = 1;
        std::vector<Senior> kept;
        kept.reserve(cap);
        for (std::size_t i = 0; i < pop.seniors.size(); ++i)
            if (!doomed[i]) kept.push_back(pop.seniors[i]);
        pop.seniors = std::move(kept);
        counts.culled = static_cast<int>(excess);
    }
    return counts;
}

}  // namespace edusim
