#include "mms/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mms::kernels {

namespace {

double lp_dist(const std::vector<double>& a, const std::vector<double>& b, double p) {
    if (p == 2.0) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double d = a[k] - b[k];
            s += d * d;
        }
        return std::sqrt(s);
    }
    if (p == 1.0) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) s += std::fabs(a[k] - b[k]);
        return s;
    }
    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::fabs(a[k] - b[k]));
        return m;
    }
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::pow(std::fabs(a[k] - b[k]), p);
    return std::pow(s, 1.0 / p);
}

}  // namespace

std::vector<double> lp_distance_matrix_serial(
    const std::vector<std::vector<double>>& coords, double p) {
    const std::size_t n = coords.size();
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = lp_dist(coords[i], coords[j], p);
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    return d;
}

std::vector<double> lp_distance_matrix_parallel(
    const std::vector<std::vector<double>>& coords, double p) {
    const std::size_t n = coords.size();
    std::vector<double> d(n * n, 0.0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) {
            const double v = lp_dist(coords[static_cast<std::size_t>(i)], coords[j], p);
            d[static_cast<std::size_t>(i) * n + j] = v;
            d[j * n + static_cast<std::size_t>(i)] = v;
        }
    return d;
}

void apsp_floyd_warshall_serial(std::vector<double>& d, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const double dik = d[i * n + k];
            for (std::size_t j = 0; j < n; ++j) {
                const double via = dik + d[k * n + j];
                if (via < d[i * n + j]) d[i * n + j] = via;
            }
        }
}

void apsp_floyd_warshall_parallel(std::vector<double>& d, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            const std::size_t ii = static_cast<std::size_t>(i);
            const double dik = d[ii * n + k];
            for (std::size_t j = 0; j < n; ++j) {
                const double via = dik + d[k * n + j];
                if (via < d[ii * n + j]) d[ii * n + j] = via;
            }
        }
    }
}

namespace {

double quasi_constant_row(const std::vector<double>& q, std::size_t n, std::size_t x) {
    double k = 1.0;
    for (std::size_t y = 0; y < n; ++y) {
        if (y == x) continue;
        const double qxy = q[x * n + y];
        for (std::size_t z = 0; z < n; ++z) {
            if (z == x || z == y) continue;
            const double denom = q[x * n + z] + q[z * n + y];
            if (denom <= 0.0)
                throw std::invalid_argument("quasimetric_constant: zero off-diagonal entry");
            k = std::max(k, qxy / denom);
        }
    }
    return k;
}

void check_offdiag(const std::vector<double>& q, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && q[i * n + j] <= 0.0)
                throw std::invalid_argument("quasimetric_constant: zero off-diagonal entry");
}

}  // namespace

double quasimetric_constant_serial(const std::vector<double>& q, std::size_t n) {
    check_offdiag(q, n);
    double k = 1.0;
    for (std::size_t x = 0; x < n; ++x) k = std::max(k, quasi_constant_row(q, n, x));
    return k;
}

double quasimetric_constant_parallel(const std::vector<double>& q, std::size_t n) {
    check_offdiag(q, n);
    double k = 1.0;
#pragma omp parallel for schedule(dynamic) reduction(max : k)
    for (std::ptrdiff_t x = 0; x < static_cast<std::ptrdiff_t>(n); ++x)
        k = std::max(k, quasi_constant_row(q, n, static_cast<std::size_t>(x)));
    return k;
}

}  // namespace mms::kernels
