// Compares the serial reference kernels against their OpenMP variants.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "mms/kernels.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
    const auto t0 = clock_type::now();
    f();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::vector<std::vector<double>> random_points(std::size_t n, std::size_t dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
    for (auto& p : pts)
        for (double& v : p) v = u(rng);
    return pts;
}

}  // namespace

int main() {
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

    {
        const auto pts = random_points(3000, 3, 7);
        std::vector<double> a, b;
        const double ts = time_ms([&] { a = mms::kernels::lp_distance_matrix_serial(pts, 2.0); });
        const double tp = time_ms([&] { b = mms::kernels::lp_distance_matrix_parallel(pts, 2.0); });
        std::printf("%-28s %10.1f %10.1f %8.2f  (match: %s)\n", "lp_distance_matrix n=3000",
                    ts, tp, ts / tp, a == b ? "yes" : "NO");
    }

    {
        auto pts = random_points(400, 3, 11);
        auto d0 = mms::kernels::lp_distance_matrix_serial(pts, 2.0);
        auto d1 = d0, d2 = d0;
        const double ts = time_ms([&] { mms::kernels::apsp_floyd_warshall_serial(d1, 400); });
        const double tp = time_ms([&] { mms::kernels::apsp_floyd_warshall_parallel(d2, 400); });
        std::printf("%-28s %10.1f %10.1f %8.2f  (match: %s)\n", "apsp_floyd_warshall n=400",
                    ts, tp, ts / tp, d1 == d2 ? "yes" : "NO");
    }

    {
        const auto pts = random_points(400, 3, 13);
        const auto d = mms::kernels::lp_distance_matrix_serial(pts, 2.0);
        double k1 = 0.0, k2 = 0.0;
        const double ts = time_ms([&] { k1 = mms::kernels::quasimetric_constant_serial(d, 400); });
        const double tp = time_ms([&] { k2 = mms::kernels::quasimetric_constant_parallel(d, 400); });
        std::printf("%-28s %10.1f %10.1f %8.2f  (match: %s)\n", "quasimetric_constant n=400",
                    ts, tp, ts / tp, k1 == k2 ? "yes" : "NO");
    }

    return 0;
}
