#include "mms/snowflake.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mms/kernels.hpp"

namespace mms {

double quasimetric_q_pair(const Space& space, std::size_t i, std::size_t j, double s,
                          QVariant variant) {
    if (s <= 0.0) throw std::invalid_argument("quasimetric_q: nonpositive s");
    if (i == j) return 0.0;
    const double d = space.dist(i, j);
    switch (variant) {
        case QVariant::plain_snowflake:
            return std::pow(d, s);
        case QVariant::general:
            return std::pow(space.ball_mass(i, d, true) + space.ball_mass(j, d, true), s);
        case QVariant::euclidean_midpoint: {
            if (!space.has_coords())
                throw std::invalid_argument("quasimetric_q: midpoint variant needs coordinates");
            const auto& ci = space.coords()[i];
            const auto& cj = space.coords()[j];
            const double r = d / 2.0;
            double m = 0.0;
            for (std::size_t k = 0; k < space.size(); ++k) {
                const auto& ck = space.coords()[k];
                double sq = 0.0;
                for (std::size_t t = 0; t < ck.size(); ++t) {
                    const double diff = ck[t] - 0.5 * (ci[t] + cj[t]);
                    sq += diff * diff;
                }
                if (std::sqrt(sq) <= r) m += space.masses()[k];
            }
            return std::pow(m, s);
        }
    }
    return 0.0;
}

QuasimetricMatrix quasimetric_q(const Space& space, double s, QVariant variant) {
    // precondition checks must happen before the parallel loop: an
    // exception thrown inside an omp region would terminate the process
    if (s <= 0.0) throw std::invalid_argument("quasimetric_q: nonpositive s");
    if (variant == QVariant::euclidean_midpoint && !space.has_coords())
        throw std::invalid_argument("quasimetric_q: midpoint variant needs coordinates");
    const std::size_t n = space.size();
    QuasimetricMatrix q;
    q.n = n;
    q.s = s;
    q.variant = variant;
    q.values.assign(n * n, 0.0);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        for (std::size_t j = ii + 1; j < n; ++j) {
            const double v = quasimetric_q_pair(space, ii, j, s, variant);
            q.values[ii * n + j] = v;
            q.values[j * n + ii] = v;
        }
    }
    q.quasi_constant_K = n >= 3 ? quasimetric_constant(q.values, n) : 1.0;
    return q;
}

double quasimetric_constant(const std::vector<double>& values, std::size_t n) {
    if (n < 3) {
        // no nondegenerate triple; still reject zero off-diagonal entries
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && values[i * n + j] <= 0.0)
                    throw std::invalid_argument("quasimetric_constant: zero off-diagonal entry");
        return 1.0;
    }
    return kernels::quasimetric_constant_parallel(values, n);
}

ChainMetricResult chain_metric(const QuasimetricMatrix& q) {
    const std::size_t n = q.n;
    ChainMetricResult res;
    res.n = n;
    res.metric = q.values;
    kernels::apsp_floyd_warshall_parallel(res.metric, n);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (res.metric[i * n + j] <= 0.0) throw chain_collapse_error(i, j);

    res.max_ratio = 1.0;
    res.min_ratio = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double r = q.values[i * n + j] / res.metric[i * n + j];
            res.max_ratio = std::max(res.max_ratio, r);
            res.min_ratio = std::min(res.min_ratio, 1.0 / r);
        }
    res.bilipschitz_C = res.max_ratio;
    return res;
}

std::vector<std::pair<double, double>> empirical_quasisymmetry(
    const Space& spaceX, const Space& spaceY, const std::vector<std::size_t>& bijection,
    std::size_t buckets_per_decade) {
    const std::size_t n = spaceX.size();
    if (spaceY.size() != n || bijection.size() != n)
        throw std::invalid_argument("empirical_quasisymmetry: size mismatch");

    // Per log-spaced bucket keep (max source ratio, max image ratio);
    // reporting the max source ratio as the bucket's t makes the
    // identity map satisfy eta_hat(t) = t exactly.
    std::map<long, std::pair<double, double>> buckets;
    const double w = 1.0 / static_cast<double>(buckets_per_decade);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t a = 0; a < n; ++a) {
            if (a == x) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (b == x || b == a) continue;
                const double t = spaceX.dist(x, a) / spaceX.dist(x, b);
                const double img = spaceY.dist(bijection[x], bijection[a]) /
                                   spaceY.dist(bijection[x], bijection[b]);
                const long key = static_cast<long>(std::floor(std::log10(t) / w));
                auto it = buckets.find(key);
                if (it == buckets.end())
                    buckets.emplace(key, std::make_pair(t, img));
                else {
                    it->second.first = std::max(it->second.first, t);
                    it->second.second = std::max(it->second.second, img);
                }
            }
        }
    std::vector<std::pair<double, double>> out;
    out.reserve(buckets.size());
    for (const auto& [key, v] : buckets) out.push_back(v);
    return out;
}

}  // namespace mms
