#include <doctest.h>

#include "fixtures.hpp"
#include "mms/space.hpp"

using namespace mms;

TEST_CASE("build_from_points: collinear integers") {
    const auto s = fixtures::line(3);
    CHECK(s.dist(0, 0) == 0.0);
    CHECK(s.dist(0, 1) == 1.0);
    CHECK(s.dist(0, 2) == 2.0);
    CHECK(s.dist(1, 2) == 1.0);
    CHECK(s.total_mass() == 3.0);
    CHECK(s.diameter() == 2.0);
    CHECK(s.resolution() == 1.0);
}

TEST_CASE("build_from_points: 3-4-5 triangle and l1") {
    const auto e = build_from_points({{0, 0}, {3, 4}});
    CHECK(e.dist(0, 1) == doctest::Approx(5.0));
    const auto m = build_from_points({{0, 0}, {1, 0}, {0, 1}}, {}, 1.0);
    CHECK(m.dist(1, 2) == doctest::Approx(2.0));
}

TEST_CASE("build_from_points rejects duplicates and bad masses") {
    CHECK_THROWS(build_from_points({{0.0}, {0.0}}));
    CHECK_THROWS(build_from_points({{0.0}, {1.0}}, {0.0, 0.0}));
    CHECK_THROWS(build_from_points({{0.0}, {1.0, 2.0}}));
}

TEST_CASE("build_from_graph: shortest paths win") {
    const std::vector<GraphVertex> vs{{"a", 1}, {"b", 1}, {"c", 1}};
    SUBCASE("path graph") {
        const auto s = build_from_graph(vs, {{"a", "b", 1}, {"b", "c", 1}});
        CHECK(s.dist(0, 2) == doctest::Approx(2.0));
    }
    SUBCASE("heavy edge bypassed") {
        const auto s = build_from_graph(vs, {{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 5}});
        CHECK(s.dist(0, 2) == doctest::Approx(2.0));
    }
    SUBCASE("single edge weight kept") {
        const auto s = build_from_graph({{"a", 1}, {"b", 1}}, {{"a", "b", 3}});
        CHECK(s.dist(0, 1) == doctest::Approx(3.0));
    }
    SUBCASE("disconnected graph rejected") {
        CHECK_THROWS(build_from_graph(vs, {{"a", "b", 1}}));
    }
}

TEST_CASE("validate catches violations") {
    SUBCASE("clean metric") {
        const auto s = fixtures::line(4);
        CHECK(validate(s.dist_matrix(), 4, s.masses(), 0.0).ok());
    }
    SUBCASE("triangle violation with defect 8") {
        // dist(a,c)=10 but dist(a,b)=dist(b,c)=1
        const std::vector<double> d{0, 1, 10, 1, 0, 1, 10, 1, 0};
        const auto rep = validate(d, 3, {1, 1, 1}, 0.0);
        REQUIRE(!rep.triangle_violations.empty());
        bool found = false;
        for (const auto& v : rep.triangle_violations)
            if (v.defect == doctest::Approx(8.0)) found = true;
        CHECK(found);
    }
    SUBCASE("asymmetric matrix") {
        const std::vector<double> d{0, 1, 2, 0};
        CHECK(!validate(d, 2, {1, 1}, 0.0).symmetric);
    }
    SUBCASE("negative mass") {
        const auto s = fixtures::line(2);
        CHECK(validate(s.dist_matrix(), 2, {1, -1}, 0.0).negative_masses ==
              std::vector<std::size_t>{1});
    }
}

TEST_CASE("ball_mass") {
    const auto s = fixtures::line(3);
    CHECK(s.ball_mass(1, 1.0, true) == 3.0);
    CHECK(s.ball_mass(1, 1.0, false) == 1.0);
    CHECK(s.ball_mass(0, 1.5, true) == 2.0);
    CHECK(s.ball_mass(0, 0.0, true) == 1.0);
    CHECK(s.ball_mass(0, 0.0, false) == 0.0);
    CHECK(s.ball_mass(0, s.diameter(), true) == s.total_mass());
    CHECK_THROWS(s.ball_mass(0, -1.0, true));
    CHECK_THROWS(s.ball_mass(9, 1.0, true));
}

TEST_CASE("builders always validate cleanly at zero tolerance") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const auto s = fixtures::random_cube_space(40, 3, seed);
        CHECK(validate(s.dist_matrix(), s.size(), s.masses(), 0.0).ok());
    }
}

TEST_CASE("build_from_matrix rejects dirty matrices") {
    const std::vector<double> d{0, 1, 10, 1, 0, 1, 10, 1, 0};
    CHECK_THROWS(build_from_matrix(d, 3));
    const auto s = fixtures::line(3);
    CHECK_NOTHROW(build_from_matrix(s.dist_matrix(), 3));
}
