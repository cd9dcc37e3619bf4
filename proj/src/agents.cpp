#include "edusim/agents.hpp"

#include <algorithm>
#include <cmath>

namespace edusim {

Point WorldGrid::clamp(Point p) const {
    return {std::clamp(p.x, 0.0, std::nextafter(width, 0.0)), std::clamp(p.y, 0.0, std::nextafter(height, 0.0))};
}

const Senior* Population::find_senior(AgentId id) const {
    auto it = std::find_if(seniors.begin(), seniors.end(), [id](const Senior& s) { return s.id == id; });
    return it == seniors.end() ? nullptr : &*it;
}

}  // namespace edusim
