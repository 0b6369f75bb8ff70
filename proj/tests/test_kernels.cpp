#include <doctest.h>

#include "fixtures.hpp"
#include "mms/kernels.hpp"

using namespace mms::kernels;

TEST_CASE("parallel kernels match serial references exactly") {
    const auto pts = fixtures::random_cube_points(120, 3, 42);

    SUBCASE("lp distance matrix") {
        for (double p : {1.0, 2.0, 3.5}) {
            CHECK(lp_distance_matrix_parallel(pts, p) == lp_distance_matrix_serial(pts, p));
        }
    }

    SUBCASE("floyd-warshall") {
        auto a = lp_distance_matrix_serial(pts, 2.0);
        // perturb into a non-metric so the closure has real work to do
        for (std::size_t k = 0; k < a.size(); k += 17) a[k] *= 3.0;
        for (std::size_t i = 0; i < 120; ++i)
            for (std::size_t j = 0; j < i; ++j)
                a[i * 120 + j] = a[j * 120 + i];
        for (std::size_t i = 0; i < 120; ++i) a[i * 120 + i] = 0.0;
        auto b = a;
        apsp_floyd_warshall_serial(a, 120);
        apsp_floyd_warshall_parallel(b, 120);
        CHECK(a == b);
    }

    SUBCASE("quasimetric constant") {
        auto d = lp_distance_matrix_serial(pts, 2.0);
        for (double& v : d) v = v * v;  // squared distances: K = 2 territory
        CHECK(quasimetric_constant_parallel(d, 120) == quasimetric_constant_serial(d, 120));
    }
}

TEST_CASE("quasimetric constant rejects zero off-diagonal entries") {
    std::vector<double> q{0, 0, 1, 0, 0, 1, 1, 1, 0};
    CHECK_THROWS_AS(quasimetric_constant_serial(q, 3), std::invalid_argument);
    CHECK_THROWS_AS(quasimetric_constant_parallel(q, 3), std::invalid_argument);
}

TEST_CASE("quasimetric constant of a metric is 1") {
    const auto pts = fixtures::random_cube_points(30, 2, 5);
    const auto d = lp_distance_matrix_serial(pts, 2.0);
    CHECK(quasimetric_constant_serial(d, 30) == doctest::Approx(1.0));
}
