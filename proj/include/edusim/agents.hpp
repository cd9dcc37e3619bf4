#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace edusim {

using AgentId = std::int64_t;

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Inclusive radius test (distance <= radius) without the square root.
inline bool within_reach(Point a, Point b, double radius) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy <= radius * radius;
}

/// Bounded (non-toroidal) plane. The left half is the practical side, the
/// right half the educated side.
struct WorldGrid {
    double width = 20.0;
    double height = 20.0;

    bool contains(Point p) const { return p.x >= 0.0 && p.x < width && p.y >= 0.0 && p.y < height; }
    double diagonal() const { return std::hypot(width, height); }
    bool on_educated_side(Point p) const { return p.x >= width / 2.0; }
    Point clamp(Point p) const;
};

enum class Education { educated, practical };
enum class Gender { male, female };
enum class OccupationBand { edu_high, edu_low, prac_high, prac_low, constructor };

inline Education education_of(OccupationBand band) {
    return (band == OccupationBand::edu_high || band == OccupationBand::edu_low) ? Education::educated
                                                                                 : Education::practical;
}

struct Senior {
    AgentId id = 0;
    int age = 0;
    Gender gender = Gender::male;
    Education education = Education::practical;
    OccupationBand band = OccupationBand::prac_low;
    double wage = 0.0;  // euros/month gross
    Point position;
    double social_reach = 0.0;
};

enum class StudentState { deciding, enrolled, done };

struct Student {
    AgentId id = 0;
    int age = 0;
    AgentId parent_id = 0;
    double parent_wage = 0.0;  // snapshot at hatch
    bool parent_educated = false;
    double parent_weight = 1.0;  // nu = 1 + r, r ~ U(0,1)
    Point position;
    double social_reach = 4.5;
    double ability = 0.0;
    double grade = 0.0;  // last exam realization
    int attempts = 0;
    bool lives_out = false;
    double openness = 0.5;
    double household_income = 0.0;  // euros/year gross
    StudentState state = StudentState::deciding;
    int ticks_remaining = 0;
    int enrolled_tick = -1;
    double loan_monthly = 0.0;
};

struct University {
    int id = 0;
    Point position;
};

struct Population {
    WorldGrid world;
    std::vector<Senior> seniors;
    std::vector<Student> students;  // ascending id order
    std::vector<University> universities;
    AgentId next_id = 1;

    AgentId allocate_id() { return next_id++; }
    const Senior* find_senior(AgentId id) const;
};

}  // namespace edusim
