#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "mms/nets.hpp"
#include "mms/regularity.hpp"

using namespace mms;

TEST_CASE("greedy net on the line") {
    const auto s = fixtures::line(4);
    const auto net = minimal_epsilon_net(s, 1.0, 0);
    CHECK(net.centers == std::vector<std::size_t>{0, 3});
    CHECK(net.covering_radius == doctest::Approx(1.0));
    CHECK(net.separation == doctest::Approx(3.0));
}

TEST_CASE("eps at or above diameter gives the seed alone") {
    const auto s = fixtures::random_cube_space(20, 2, 3);
    const auto net = minimal_epsilon_net(s, s.diameter() * 1.5, 7);
    CHECK(net.centers == std::vector<std::size_t>{7});
    CHECK(net.covering_radius <= s.diameter());
}

TEST_CASE("net axioms and determinism on random spaces") {
    for (unsigned seed : {11u, 12u, 13u}) {
        const auto s = fixtures::random_cube_space(60, 3, seed);
        for (double eps : {0.2, 0.5, 0.9}) {
            const auto a = minimal_epsilon_net(s, eps, 0);
            const auto b = minimal_epsilon_net(s, eps, 0);
            CHECK(a.centers == b.centers);
            CHECK(a.covering_radius <= eps);
            CHECK(a.separation > eps);
        }
        // monotonicity in eps
        const auto small = minimal_epsilon_net(s, 0.2, 0);
        const auto large = minimal_epsilon_net(s, 0.5, 0);
        CHECK(small.centers.size() >= large.centers.size());
    }
}

TEST_CASE("intersection pattern on the line") {
    const auto s = fixtures::line(4);
    SUBCASE("disjoint balls") {
        const auto net = minimal_epsilon_net(s, 1.0, 0);  // centers {0,3}
        CHECK(intersection_pattern(s, net).edges.empty());
        CHECK(covering_order(s, net) == 1);
    }
    SUBCASE("overlapping balls") {
        Net net;
        net.epsilon = 2.0;
        net.centers = {0, 3};
        net.covering_radius = 1.0;
        net.separation = 3.0;
        const auto pat = intersection_pattern(s, net);
        REQUIRE(pat.edges.size() == 1);
        CHECK(pat.edges[0] == std::pair<std::size_t, std::size_t>{0, 1});
    }
    SUBCASE("everything in both balls") {
        Net net;
        net.epsilon = 3.0;
        net.centers = {0, 3};
        CHECK(covering_order(s, net) == 2);
    }
}

TEST_CASE("pattern properties on random spaces") {
    const auto s = fixtures::random_cube_space(80, 2, 21);
    const auto net = minimal_epsilon_net(s, 0.25, 0);
    const auto pat = intersection_pattern(s, net);
    for (const auto& [k, l] : pat.edges) {
        CHECK(k < l);
        // witnessed intersection needs centers within 2*eps
        CHECK(s.dist(net.centers[k], net.centers[l]) <= 2 * net.epsilon + 1e-12);
    }
    // centers within eps of each other must share a witness (either center)
    for (std::size_t k = 0; k < net.centers.size(); ++k)
        for (std::size_t l = k + 1; l < net.centers.size(); ++l)
            if (s.dist(net.centers[k], net.centers[l]) <= net.epsilon) {
                const bool present =
                    std::find(pat.edges.begin(), pat.edges.end(),
                              std::pair<std::size_t, std::size_t>{k, l}) != pat.edges.end();
                CHECK(present);
            }
    CHECK(covering_order(s, net) <= net.centers.size());
}

TEST_CASE("net equivalence check") {
    SUBCASE("unit-square grid holds") {
        const auto s = fixtures::unit_square_grid(24);
        const auto fit = ahlfors_fit(s);
        const auto rep = net_equivalence_check(s, 0.5, 0.2, fit.alpha, fit.C0);
        CHECK(rep.holds);
    }
    SUBCASE("singleton is trivially fine") {
        const auto s = build_from_points({{0.0}});
        const auto rep = net_equivalence_check(s, 0.5, 0.2, 2.0, 1.0);
        CHECK(rep.holds);
        CHECK(rep.forward_constant == 0.0);
        CHECK(rep.backward_constant == 0.0);
    }
    SUBCASE("two far clusters with a dishonest C0 fail") {
        std::vector<std::vector<double>> pts;
        for (int i = 0; i < 6; ++i) pts.push_back({0.1 * i});
        for (int i = 0; i < 6; ++i) pts.push_back({1000.0 + 0.1 * i});
        const auto s = build_from_points(pts);
        const auto rep = net_equivalence_check(s, 0.5, 0.3, 1.0, 1.0);
        CHECK(!rep.holds);
    }
}
