#include "edusim/network.hpp"

#include <algorithm>
#include <cmath>

namespace edusim {

ReachProfile ReachProfile::from(const NetworkParams& net) {
    return {net.senior_reach_mean, net.senior_reach_sd, net.reach_floor,   net.outlier_share,
            net.extreme_share,     net.outlier_reach,   net.extreme_reach};
}

void ReachProfile::validate() const {
    if (extreme_share > outlier_share) throw ConfigError("reach profile: extreme share exceeds outlier share");
    if (!(floor > 0.0) || !(outlier_value > 0.0) || !(extreme_value > 0.0))
        throw ConfigError("reach profile: reaches must be positive");
}

double assign_social_reach(const ReachProfile& profile, Rng& rng) {
    // one uniform decides the tail membership so the shares are exact
    const double u = uniform01(rng);
    if (u < profile.extreme_share) return profile.extreme_value;
    if (u < profile.extreme_share + profile.outlier_share) return profile.outlier_value;
    return normal_above(rng, profile.mean, profile.sd, profile.floor);
}

// ---- SpatialIndex -------------------------------------------------------------

SpatialIndex::SpatialIndex(const WorldGrid& world, std::vector<Point> points, double cell_size)
    : world_(world), points_(std::move(points)), cell_(cell_size) {
    cols_ = std::max(1, static_cast<int>(std::ceil(world_.width / cell_)));
    rows_ = std::max(1, static_cast<int>(std::ceil(world_.height / cell_)));
    buckets_.resize(static_cast<std::size_t>(cols_) * static_cast<std::size_t>(rows_));
    for (std::size_t i = 0; i < points_.size(); ++i)
        buckets_[static_cast<std::size_t>(row_of(points_[i].y) * cols_ + col_of(points_[i].x))].push_back(i);
}

int SpatialIndex::col_of(double x) const {
    return std::clamp(static_cast<int>(std::floor(x / cell_)), 0, cols_ - 1);
}

int SpatialIndex::row_of(double y) const {
    return std::clamp(static_cast<int>(std::floor(y / cell_)), 0, rows_ - 1);
}

std::vector<std::size_t> SpatialIndex::within(Point centre, double radius) const {
    std::vector<std::size_t> out;
    for_each_within(centre, radius, [&](std::size_t i) { out.push_back(i); });
    std::sort(out.begin(), out.end());
    return out;
}

// ---- queries ----------------------------------------------------------------------

std::vector<AgentRef> neighbors_of(AgentRef self, const Population& pop) {
    const bool is_senior = self.kind == AgentKind::senior;
    const Point at = is_senior ? pop.seniors.at(self.index).position : pop.students.at(self.index).position;
    const double reach = is_senior ? pop.seniors[self.index].social_reach : pop.students[self.index].social_reach;

    std::vector<AgentRef> out;
    for (std::size_t i = 0; i < pop.seniors.size(); ++i) {
        if (is_senior && i == self.index) continue;
        if (within_reach(pop.seniors[i].position, at, reach)) out.push_back({AgentKind::senior, i});
    }
    for (std::size_t i = 0; i < pop.students.size(); ++i) {
        if (!is_senior && i == self.index) continue;
        if (pop.students[i].state == StudentState::done) continue;
        if (within_reach(pop.students[i].position, at, reach)) out.push_back({AgentKind::student, i});
    }
    return out;
}

std::vector<std::size_t> classmates_of(std::size_t student_index, const Population& pop) {
    std::vector<std::size_t> out;
    for (const auto& ref : neighbors_of({AgentKind::student, student_index}, pop))
        if (ref.kind == AgentKind::student) out.push_back(ref.index);
    return out;
}

namespace {

WageObservation parent_entry(const Student& s) {
    return {s.parent_wage, s.parent_weight, s.parent_educated ? Education::educated : Education::practical};
}

}  // namespace

std::vector<WageObservation> working_neighbor_wages(const Student& student, const Population& pop) {
    std::vector<WageObservation> out;
    out.push_back(parent_entry(student));
    for (const auto& sen : pop.seniors) {
        if (sen.id == student.parent_id) continue;
        if (within_reach(sen.position, student.position, student.social_reach))
            out.push_back({sen.wage, 1.0, sen.education});
    }
    return out;
}

std::vector<WageObservation> working_neighbor_wages(const Student& student, const Population& pop,
                                                    const SpatialIndex& senior_index) {
    std::vector<WageObservation> out;
    out.push_back(parent_entry(student));
    senior_index.for_each_within(student.position, student.social_reach, [&](std::size_t i) {
        const auto& sen = pop.seniors[i];
        if (sen.id != student.parent_id) out.push_back({sen.wage, 1.0, sen.education});
    });
    return out;
}

}  // namespace edusim
