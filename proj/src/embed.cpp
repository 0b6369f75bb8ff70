#include "mms/embed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace mms {

namespace {

double euclid(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

std::pair<double, double> distortion(const std::vector<double>& target, std::size_t n,
                                     const std::vector<std::vector<double>>& coords) {
    if (coords.size() != n) throw std::invalid_argument("distortion: coordinate count mismatch");
    double rmax = 0.0, rmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double t = target[i * n + j];
            if (t <= 0.0) continue;
            const double r = euclid(coords[i], coords[j]) / t;
            rmax = std::max(rmax, r);
            rmin = std::min(rmin, r);
        }
    if (rmin <= 0.0)
        return {std::numeric_limits<double>::infinity(), 1.0};
    return {rmax / rmin, 1.0 / std::sqrt(rmax * rmin)};
}

double log_stress(const std::vector<double>& target, std::size_t n,
                  const std::vector<std::vector<double>>& coords,
                  std::vector<std::vector<double>>* grad) {
    const std::size_t N = coords[0].size();
    if (grad) grad->assign(n, std::vector<double>(N, 0.0));
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double t = target[i * n + j];
            if (t <= 0.0) continue;
            const double d = std::max(euclid(coords[i], coords[j]), 1e-300);
            const double lr = std::log(d / t);
            e += lr * lr;
            if (grad) {
                const double c = 2.0 * lr / (d * d);
                for (std::size_t k = 0; k < N; ++k) {
                    const double diff = coords[i][k] - coords[j][k];
                    (*grad)[i][k] += c * diff;
                    (*grad)[j][k] -= c * diff;
                }
            }
        }
    return e;
}

EmbeddingResult embed_target(const std::vector<double>& target, std::size_t n, std::size_t N,
                             unsigned seed, const EmbedOptions& opts) {
    if (n < 2) throw std::invalid_argument("embed: degenerate space");
    if (N < 1) throw std::invalid_argument("embed: target dimension must be >= 1");

    double tmax = 0.0;
    for (double v : target) tmax = std::max(tmax, v);

    EmbeddingResult best;
    best.distortion_L = std::numeric_limits<double>::infinity();
    for (std::size_t rr = 0; rr < opts.restarts; ++rr) {
        std::mt19937 rng(seed * 1000u + static_cast<unsigned>(rr));
        std::normal_distribution<double> gauss(0.0, tmax / 2.0);
        std::vector<std::vector<double>> x(n, std::vector<double>(N));
        for (auto& row : x)
            for (double& v : row) v = gauss(rng);

        std::vector<std::vector<double>> g;
        double e = log_stress(target, n, x, &g);
        double step = 0.1;
        std::size_t it = 0;
        bool converged = false;
        for (; it < opts.max_iters; ++it) {
            double gn2 = 0.0;
            for (const auto& row : g)
                for (double v : row) gn2 += v * v;
            if (std::sqrt(gn2) < opts.grad_tol) { converged = true; break; }

            bool moved = false;
            while (step > 1e-16) {
                std::vector<std::vector<double>> xn(n, std::vector<double>(N));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t k = 0; k < N; ++k) xn[i][k] = x[i][k] - step * g[i][k];
                std::vector<std::vector<double>> gn;
                const double en = log_stress(target, n, xn, &gn);
                if (en < e - 1e-4 * step * gn2) {
                    x = std::move(xn);
                    g = std::move(gn);
                    e = en;
                    step *= 1.3;
                    moved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) break;
        }

        const auto [L, scale] = distortion(target, n, x);
        if (L < best.distortion_L) {
            best.coords = std::move(x);
            best.N = N;
            best.distortion_L = L;
            best.scale = scale;
            best.iterations = it;
            best.converged = converged;
        }
    }
    return best;
}

EmbeddingResult embed_snowflake(const Space& space, double snowflake_eps, std::size_t N,
                                unsigned seed, const EmbedOptions& opts) {
    if (snowflake_eps <= 0.0 || snowflake_eps > 1.0)
        throw std::invalid_argument("embed_snowflake: snowflake exponent out of (0,1]");
    const std::size_t n = space.size();
    std::vector<double> target(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) target[i * n + j] = std::pow(space.dist(i, j), snowflake_eps);
    return embed_target(target, n, N, seed, opts);
}

EmbeddingBudget naor_naiman_budget(double doubling_D, double epsilon, double a, double b) {
    if (doubling_D <= 1.0) throw std::invalid_argument("naor_naiman_budget: D must exceed 1");
    if (epsilon <= 0.0 || epsilon >= 0.5)
        throw std::invalid_argument("naor_naiman_budget: epsilon out of (0, 1/2)");
    EmbeddingBudget budget;
    budget.a = a;
    budget.b = b;
    budget.doubling_D = doubling_D;
    budget.epsilon = epsilon;
    budget.N_bound = a * std::log(doubling_D);
    const double q = std::log(doubling_D) / epsilon;
    budget.L_bound = b * q * q;
    return budget;
}

}  // namespace mms
