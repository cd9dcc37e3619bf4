#include "doctest.h"

#include <algorithm>
#include <tuple>

#include "edusim/economics.hpp"
#include "edusim/network.hpp"

using namespace edusim;

namespace {

Senior senior_at(AgentId id, Point p, double reach = 5.5, double wage = 3000.0,
                 Education edu = Education::practical) {
    Senior s;
    s.id = id;
    s.age = 30;
    s.position = p;
    s.social_reach = reach;
    s.wage = wage;
    s.education = edu;
    return s;
}

Student student_at(AgentId id, Point p, double reach = 4.5) {
    Student s;
    s.id = id;
    s.position = p;
    s.social_reach = reach;
    return s;
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST_CASE("reach assignment") {
    SUBCASE("degenerate profile") {
        ReachProfile p;
        p.sd = 0.0;
        p.outlier_share = 0.0;
        p.extreme_share = 0.0;
        Rng rng(1);
        for (int i = 0; i < 100; ++i) CHECK(assign_social_reach(p, rng) == 5.5);
    }

    SUBCASE("tail shares over 1e5 draws") {
        const ReachProfile p = ReachProfile::from(NetworkParams{});
        Rng rng(2);
        const int n = 100000;
        int outlier = 0, extreme = 0;
        for (int i = 0; i < n; ++i) {
            const double r = assign_social_reach(p, rng);
            CHECK(r > 0.0);
            outlier += r == p.outlier_value;
            extreme += r == p.extreme_value;
        }
        // binomial sd: 0.05 -> 0.00069, 0.01 -> 0.00031
        CHECK(std::abs(outlier / double(n) - 0.05) < 4 * 0.00069);
        CHECK(std::abs(extreme / double(n) - 0.01) < 4 * 0.00031);
    }

    SUBCASE("profile validation") {
        ReachProfile p;
        p.extreme_share = 0.1;
        CHECK_THROWS_AS(p.validate(), ConfigError);
    }
}

TEST_CASE("neighbors_of") {
    Population pop;
    pop.seniors.push_back(senior_at(1, {5, 5}));

    SUBCASE("alone") { CHECK(neighbors_of({AgentKind::senior, 0}, pop).empty()); }

    SUBCASE("boundary distance is included") {
        pop.seniors.push_back(senior_at(2, {5, 10.5}));
        const auto n = neighbors_of({AgentKind::senior, 0}, pop);
        REQUIRE(n.size() == 1);
        CHECK(n[0] == AgentRef{AgentKind::senior, 1});
    }

    SUBCASE("perception is not mutual") {
        pop.students.push_back(student_at(2, {8, 9}));  // distance 5 from (5,5)
        const auto from_senior = neighbors_of({AgentKind::senior, 0}, pop);
        const auto from_student = neighbors_of({AgentKind::student, 0}, pop);
        REQUIRE(from_senior.size() == 1);
        CHECK(from_senior[0] == AgentRef{AgentKind::student, 0});
        CHECK(from_student.empty());
    }

    SUBCASE("pure function of positions") {
        Rng rng(4);
        for (int i = 0; i < 200; ++i) pop.seniors.push_back(senior_at(i + 2, {uniform(rng, 0, 20), uniform(rng, 0, 20)}));
        CHECK(neighbors_of({AgentKind::senior, 3}, pop) == neighbors_of({AgentKind::senior, 3}, pop));
    }
}

TEST_CASE("classmates_of") {
    Population pop;

    SUBCASE("distance 4.5 is mutual") {
        pop.students = {student_at(1, {0, 0}), student_at(2, {4.5, 0})};
        CHECK(classmates_of(0, pop) == std::vector<std::size_t>{1});
        CHECK(classmates_of(1, pop) == std::vector<std::size_t>{0});
    }

    SUBCASE("distance 4.6 is out of reach") {
        pop.students = {student_at(1, {0, 0}), student_at(2, {4.6, 0})};
        CHECK(classmates_of(0, pop).empty());
        CHECK(classmates_of(1, pop).empty());
    }

    SUBCASE("no transitivity") {
        pop.students = {student_at(1, {0, 0}), student_at(2, {4, 0}), student_at(3, {8, 0})};
        CHECK(classmates_of(1, pop) == std::vector<std::size_t>{0, 2});
        CHECK(classmates_of(0, pop) == std::vector<std::size_t>{1});
    }

    SUBCASE("reciprocity on 1000 random placements") {
        Rng rng(17);
        for (int i = 0; i < 1000; ++i) pop.students.push_back(student_at(i + 1, {uniform(rng, 0, 20), uniform(rng, 0, 20)}));
        std::vector<std::vector<std::size_t>> lists;
        for (std::size_t i = 0; i < pop.students.size(); ++i) lists.push_back(classmates_of(i, pop));
        long pairs = 0;
        for (std::size_t a = 0; a < lists.size(); ++a)
            for (std::size_t b : lists[a]) {
                CHECK(contains(lists[b], a));
                ++pairs;
            }
        CHECK(pairs > 0);
    }
}

TEST_CASE("spatial index agrees with brute force") {
    Rng rng(23);
    const WorldGrid world;
    std::vector<Point> pts;
    for (int i = 0; i < 2000; ++i) pts.push_back({uniform(rng, 0, 20), uniform(rng, 0, 20)});
    pts.push_back({3.0, 7.5});  // exactly on a query boundary below
    const SpatialIndex index(world, pts);
    for (int q = 0; q < 200; ++q) {
        const Point c = q == 0 ? Point{3.0, 3.0} : Point{uniform(rng, 0, 20), uniform(rng, 0, 20)};
        const double r = q == 0 ? 4.5 : uniform(rng, 0.5, 14);
        std::vector<std::size_t> brute;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (distance(pts[i], c) <= r) brute.push_back(i);
        CHECK(index.within(c, r) == brute);
    }
}

TEST_CASE("working_neighbor_wages") {
    Population pop;
    Student s = student_at(100, {10, 10});
    s.parent_id = 1;
    s.parent_wage = 3000.0;
    s.parent_weight = 1.5;
    s.parent_educated = false;

    SUBCASE("parent is always present") {
        pop.seniors.push_back(senior_at(1, {19, 19}, 5.5, 3100.0));  // parent, far away, wage moved on
        const auto w = working_neighbor_wages(s, pop);
        REQUIRE(w.size() == 1);
        CHECK(w[0].wage == 3000.0);
        CHECK(w[0].weight == 1.5);
        CHECK(w[0].education == Education::practical);
    }

    SUBCASE("parent and one neighbor") {
        s.parent_wage = 4000.0;
        s.parent_educated = true;
        pop.seniors.push_back(senior_at(1, {10, 11}, 5.5, 4000.0, Education::educated));
        pop.seniors.push_back(senior_at(2, {11, 10}, 5.5, 3000.0, Education::practical));
        const auto w = working_neighbor_wages(s, pop);
        REQUIRE(w.size() == 2);
        CHECK(w[0].wage == 4000.0);
        CHECK(w[0].weight == 1.5);
        CHECK(w[0].education == Education::educated);
        CHECK(w[1].wage == 3000.0);
        CHECK(w[1].weight == 1.0);
        CHECK(w[1].education == Education::practical);
    }

    SUBCASE("zero reach leaves only the parent") {
        s.social_reach = 0.0;
        pop.seniors.push_back(senior_at(7, {10.1, 10}, 5.5, 5000.0));
        CHECK(working_neighbor_wages(s, pop).size() == 1);
    }

    SUBCASE("indexed overload returns the same multiset") {
        Rng rng(31);
        for (int i = 0; i < 500; ++i)
            pop.seniors.push_back(senior_at(i + 1, {uniform(rng, 0, 20), uniform(rng, 0, 20)}, 5.5,
                                            uniform(rng, 2000, 6000),
                                            i % 3 ? Education::practical : Education::educated));
        std::vector<Point> pts;
        for (const auto& sen : pop.seniors) pts.push_back(sen.position);
        const SpatialIndex index(pop.world, pts);
        auto key = [](const WageObservation& o) { return std::tuple(o.wage, o.weight, o.education); };
        auto a = working_neighbor_wages(s, pop);
        auto b = working_neighbor_wages(s, pop, index);
        auto by_key = [&](const WageObservation& x, const WageObservation& y) { return key(x) < key(y); };
        std::sort(a.begin(), a.end(), by_key);
        std::sort(b.begin(), b.end(), by_key);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(key(a[i]) == key(b[i]));
    }
}
