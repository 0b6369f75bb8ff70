#pragma once

#include <random>
#include <vector>

#include "mms/space.hpp"

namespace fixtures {

inline mms::Space line(std::size_t n) {
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({static_cast<double>(i)});
    return mms::build_from_points(pts);
}

/// side x side uniform grid over [0,1]^2; mass = cell area so total mass
/// approximates Lebesgue measure of the square.
inline mms::Space unit_square_grid(std::size_t side, bool lebesgue_mass = true) {
    const double h = 1.0 / static_cast<double>(side - 1);
    std::vector<std::vector<double>> pts;
    pts.reserve(side * side);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j)
            pts.push_back({i * h, j * h});
    std::vector<double> masses;
    if (lebesgue_mass) masses.assign(side * side, h * h);
    return mms::build_from_points(pts, masses);
}

inline std::vector<std::vector<double>> random_cube_points(std::size_t n, std::size_t dim,
                                                           unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
    for (auto& p : pts)
        for (double& v : p) v = u(rng);
    return pts;
}

inline mms::Space random_cube_space(std::size_t n, std::size_t dim, unsigned seed) {
    return mms::build_from_points(random_cube_points(n, dim, seed));
}

}  // namespace fixtures
