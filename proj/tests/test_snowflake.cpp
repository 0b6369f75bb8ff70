#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "mms/snowflake.hpp"

using namespace mms;

TEST_CASE("quasimetric q on the line, s = 1, general variant") {
    const auto s = fixtures::line(3);
    const auto q = quasimetric_q(s, 1.0, QVariant::general);
    // q(0,1) = muB[0,1] + muB[1,1] = 2 + 3
    CHECK(q.at(0, 1) == doctest::Approx(5.0));
    CHECK(q.at(0, 0) == 0.0);
    CHECK(q.at(0, 1) == q.at(1, 0));
}

TEST_CASE("plain snowflake at s = 1 is the metric itself") {
    const auto s = fixtures::random_cube_space(25, 2, 9);
    const auto q = quasimetric_q(s, 1.0, QVariant::plain_snowflake);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            CHECK(q.at(i, j) == doctest::Approx(s.dist(i, j)));
    CHECK(q.quasi_constant_K == doctest::Approx(1.0));
}

TEST_CASE("plain snowflake quasimetric constant") {
    const auto line = fixtures::line(3);
    SUBCASE("s <= 1 stays a metric") {
        for (double s : {0.3, 0.7, 1.0})
            CHECK(quasimetric_q(line, s, QVariant::plain_snowflake).quasi_constant_K ==
                  doctest::Approx(1.0));
    }
    SUBCASE("d^2 on the line gives K = 2") {
        const auto q = quasimetric_q(line, 2.0, QVariant::plain_snowflake);
        CHECK(q.quasi_constant_K == doctest::Approx(2.0));
    }
}

TEST_CASE("quasimetric axioms hold for all s on random spaces") {
    for (double s : {0.25, 0.5, 1.5}) {
        const auto sp = fixtures::random_cube_space(20, 3, 31);
        const auto q = quasimetric_q(sp, s, QVariant::general);
        for (std::size_t i = 0; i < sp.size(); ++i)
            for (std::size_t j = 0; j < sp.size(); ++j) {
                CHECK(q.at(i, j) == q.at(j, i));
                if (i == j)
                    CHECK(q.at(i, j) == 0.0);
                else
                    CHECK(q.at(i, j) > 0.0);
            }
        CHECK(q.quasi_constant_K >= 1.0);
        // K really bounds all triples
        for (std::size_t x = 0; x < sp.size(); ++x)
            for (std::size_t y = 0; y < sp.size(); ++y)
                for (std::size_t z = 0; z < sp.size(); ++z) {
                    if (x == y || x == z || y == z) continue;
                    CHECK(q.at(x, y) <=
                          q.quasi_constant_K * (q.at(x, z) + q.at(z, y)) + 1e-12);
                }
    }
}

TEST_CASE("two-point space has quasimetric constant 1") {
    const auto s = fixtures::line(2);
    CHECK(quasimetric_q(s, 3.0, QVariant::plain_snowflake).quasi_constant_K == 1.0);
}

TEST_CASE("midpoint variant requires coordinates") {
    const auto g = build_from_graph({{"a", 1}, {"b", 1}}, {{"a", "b", 1}});
    CHECK_THROWS(quasimetric_q(g, 0.5, QVariant::euclidean_midpoint));
}

TEST_CASE("chain metric") {
    const auto line = fixtures::line(3);
    SUBCASE("true metric is a fixed point") {
        const auto q = quasimetric_q(line, 1.0, QVariant::plain_snowflake);
        const auto cm = chain_metric(q);
        CHECK(cm.max_ratio == doctest::Approx(1.0));
        CHECK(cm.min_ratio == doctest::Approx(1.0));
        for (std::size_t i = 0; i < 9; ++i) CHECK(cm.metric[i] == doctest::Approx(q.values[i]));
    }
    SUBCASE("d^2 on the line chains through the middle") {
        const auto q = quasimetric_q(line, 2.0, QVariant::plain_snowflake);
        const auto cm = chain_metric(q);
        CHECK(cm.metric[0 * 3 + 2] == doctest::Approx(2.0));
        CHECK(cm.max_ratio == doctest::Approx(2.0));
    }
    SUBCASE("metric never exceeds q entrywise") {
        const auto sp = fixtures::random_cube_space(30, 2, 77);
        const auto q = quasimetric_q(sp, 0.5, QVariant::general);
        const auto cm = chain_metric(q);
        for (std::size_t i = 0; i < q.values.size(); ++i)
            CHECK(cm.metric[i] <= q.values[i] + 1e-12);
        CHECK(cm.max_ratio >= 1.0);
        CHECK(cm.min_ratio <= 1.0);
    }
}

TEST_CASE("empirical quasisymmetry") {
    const auto s = fixtures::random_cube_space(15, 2, 3);
    std::vector<std::size_t> id(s.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    SUBCASE("identity map: eta_hat(t) = t") {
        for (const auto& [t, eta] : empirical_quasisymmetry(s, s, id))
            CHECK(eta == doctest::Approx(t));
    }
    SUBCASE("similarity x -> 2x: ratios cancel") {
        std::vector<std::vector<double>> doubled;
        for (const auto& p : s.coords()) doubled.push_back({2 * p[0], 2 * p[1]});
        const auto s2 = build_from_points(doubled);
        for (const auto& [t, eta] : empirical_quasisymmetry(s, s2, id))
            CHECK(eta == doctest::Approx(t));
    }
    SUBCASE("square-root snowflake image: eta_hat(t) = sqrt(t)") {
        std::vector<double> half(s.size() * s.size());
        for (std::size_t i = 0; i < half.size(); ++i) half[i] = std::sqrt(s.dist_matrix()[i]);
        const auto s2 = build_from_matrix(half, s.size());
        for (const auto& [t, eta] : empirical_quasisymmetry(s, s2, id))
            CHECK(eta == doctest::Approx(std::sqrt(t)));
    }
}
