#pragma once

#include <vector>

#include "edusim/agents.hpp"
#include "edusim/params.hpp"
#include "edusim/random.hpp"

namespace edusim {

/// Uniform position on the agent's own half with probability 1/2 + segregation/2,
/// otherwise on the opposite half.
Point assign_location(Education education, double segregation, const WorldGrid& world, Rng& rng);

/// A fresh working senior: band, wage, location and reach drawn from params.
Senior make_senior(AgentId id, int age, Education education, const SimulationParams& params, Rng& rng);

/// Seniors, universities and the first cohort of students.
Population init_world(const SimulationParams& params, Rng& rng);

/// Point at exactly `steps` from `origin` in a uniformly random direction that
/// stays in the world. Falls back to clamping when no direction fits.
Point displace(Point origin, double steps, const WorldGrid& world, Rng& rng);

/// Each senior spawns one student with probability birth_rate. Returned in
/// ascending id order; the caller appends them.
std::vector<Student> hatch_students(Population& pop, const SimulationParams& params, Rng& rng);

struct CullCounts {
    int retired = 0;
    int culled = 0;
};

/// Removes seniors above retirement age, then random seniors until the
/// carrying capacity holds.
CullCounts cull_and_retire(Population& pop, const SimulationParams& params, Rng& rng);

}  // namespace edusim
