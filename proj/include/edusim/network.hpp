#pragma once

#include <cstddef>
#include <vector>

#include "edusim/agents.hpp"
#include "edusim/economics.hpp"
#include "edusim/params.hpp"
#include "edusim/random.hpp"

namespace edusim {

/// Fat-tailed senior reach: a truncated normal body plus fixed outlier and
/// extreme values for a share of agents.
struct ReachProfile {
    double mean = 5.5;
    double sd = 1.0;
    double floor = 0.5;
    double outlier_share = 0.05;
    double extreme_share = 0.01;
    double outlier_value = 9.0;
    double extreme_value = 14.0;

    static ReachProfile from(const NetworkParams& net);
    void validate() const;
};

double assign_social_reach(const ReachProfile& profile, Rng& rng);

enum class AgentKind { senior, student };

struct AgentRef {
    AgentKind kind;
    std::size_t index;  // into Population::seniors or Population::students

    bool operator==(const AgentRef&) const = default;
};

/// Uniform-bucket index over a position snapshot. Radius queries are
/// inclusive (distance <= radius) and results come back in storage order.
class SpatialIndex {
public:
    SpatialIndex(const WorldGrid& world, std::vector<Point> points, double cell_size = 1.0);

    template <class F>
    void for_each_within(Point centre, double radius, F&& visit) const;

    std::vector<std::size_t> within(Point centre, double radius) const;

private:
    WorldGrid world_;
    std::vector<Point> points_;
    double cell_;
    int cols_;
    int rows_;
    std::vector<std::vector<std::size_t>> buckets_;

    int col_of(double x) const;
    int row_of(double y) const;
};

/// Everything `self` perceives: seniors and students within its own reach,
/// excluding itself. Perception need not be mutual.
std::vector<AgentRef> neighbors_of(AgentRef self, const Population& pop);

/// Other students within the student's reach. All students share one reach,
/// so the relation is symmetric.
std::vector<std::size_t> classmates_of(std::size_t student_index, const Population& pop);

/// Wages of senior neighbors (nu = 1) plus the parent's snapshot wage with its
/// own weight, whatever the parent's distance.
std::vector<WageObservation> working_neighbor_wages(const Student& student, const Population& pop);

/// Same query against a prebuilt index of the seniors' positions.
std::vector<WageObservation> working_neighbor_wages(const Student& student, const Population& pop,
                                                    const SpatialIndex& senior_index);

template <class F>
void SpatialIndex::for_each_within(Point centre, double radius, F&& visit) const {
    if (points_.empty() || radius < 0.0) return;
    const int c0 = col_of(centre.x - radius), c1 = col_of(centre.x + radius);
    const int r0 = row_of(centre.y - radius), r1 = row_of(centre.y + radius);
    // buckets are visited in row-major order; callers needing storage order sort
    for (int r = r0; r <= r1; ++r)
        for (int c = c0; c <= c1; ++c)
            for (std::size_t i : buckets_[static_cast<std::size_t>(r * cols_ + c)])
                if (within_reach(points_[i], centre, radius)) visit(i);
}

}  // namespace edusim
