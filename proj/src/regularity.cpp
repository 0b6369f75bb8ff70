#include "mms/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mms/nets.hpp"

namespace mms {

std::vector<double> default_radii_grid(const Space& space, std::size_t count) {
    std::vector<double> radii;
    if (space.size() < 2) return radii;
    const double lo = space.resolution(), hi = space.diameter();
    if (lo == hi || count < 2) {
        radii.push_back(hi);
        return radii;
    }
    for (std::size_t i = 0; i < count; ++i)
        radii.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    return radii;
}

double measure_doubling_constant(const Space& space, const std::vector<double>& radii_in) {
    if (space.size() < 2) return 1.0;
    const auto radii = radii_in.empty() ? default_radii_grid(space) : radii_in;
    double D = 1.0;
#pragma omp parallel for schedule(dynamic) reduction(max : D)
    for (std::ptrdiff_t x = 0; x < static_cast<std::ptrdiff_t>(space.size()); ++x)
        for (double r : radii) {
            const double small = space.ball_mass(static_cast<std::size_t>(x), r, true);
            if (small <= 0.0) continue;
            D = std::max(D, space.ball_mass(static_cast<std::size_t>(x), 2.0 * r, true) / small);
        }
    return D;
}

long metric_doubling_constant(const Space& space, const std::vector<double>& radii_in) {
    if (space.size() < 2) return 1;
    const auto radii = radii_in.empty() ? default_radii_grid(space) : radii_in;
    const std::size_t n = space.size();
    long D1 = 1;
    for (std::size_t x = 0; x < n; ++x) {
        for (double r : radii) {
            // greedy r/2-net of the points inside B[x,r], seeded at x
            std::vector<std::size_t> ball;
            for (std::size_t y = 0; y < n; ++y)
                if (space.dist(x, y) <= r) ball.push_back(y);
            std::vector<std::size_t> centers{x};
            std::vector<double> mind(ball.size());
            for (std::size_t t = 0; t < ball.size(); ++t) mind[t] = space.dist(x, ball[t]);
            for (;;) {
                std::size_t far = 0;
                for (std::size_t t = 1; t < ball.size(); ++t)
                    if (mind[t] > mind[far]) far = t;
                if (ball.empty() || mind[far] <= r / 2.0) break;
                centers.push_back(ball[far]);
                for (std::size_t t = 0; t < ball.size(); ++t)
                    mind[t] = std::min(mind[t], space.dist(ball[far], ball[t]));
            }
            D1 = std::max(D1, static_cast<long>(centers.size()));
        }
    }
    return D1;
}

AhlforsFit ahlfors_fit(const Space& space, const AhlforsOptions& opts) {
    auto radii = opts.radii.empty() ? default_radii_grid(space) : opts.radii;
    std::vector<double> distinct = radii;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 2)
        throw std::invalid_argument("ahlfors_fit: need at least 2 distinct positive radii");

    std::vector<std::size_t> centers = opts.centers;
    if (centers.empty())
        for (std::size_t i = 0; i < space.size(); ++i) centers.push_back(i);

    // least squares of log(mass) against log(R), slope + intercept
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t m = 0;
    std::vector<std::pair<double, double>> samples;  // (log R, log mass)
    for (std::size_t x : centers)
        for (double r : radii) {
            const double mu = space.ball_mass(x, r, true);
            if (mu <= 0.0) continue;
            const double lx = std::log(r), ly = std::log(mu);
            samples.push_back({lx, ly});
            sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
            ++m;
        }
    const double det = m * sxx - sx * sx;
    if (m < 2 || det <= 0.0) throw std::invalid_argument("ahlfors_fit: degenerate grid");

    AhlforsFit fit;
    fit.alpha = (m * sxy - sx * sy) / det;
    const double intercept = (sy - fit.alpha * sx) / m;
    double max_resid = 0.0, max_dev = 0.0;
    for (const auto& [lx, ly] : samples) {
        max_resid = std::max(max_resid, std::fabs(ly - fit.alpha * lx - intercept));
        // deviation against the pure power law R^alpha, which is what C0 certifies
        max_dev = std::max(max_dev, std::fabs(ly - fit.alpha * lx));
    }
    fit.residual = max_resid;
    fit.C0 = std::max(1.0, std::exp(max_dev));
    return fit;
}

double uniform_perfectness(const Space& space) {
    const std::size_t n = space.size();
    if (n < 2) throw std::invalid_argument("uniform_perfectness: singleton space");
    const double diam = space.diameter();
    double C = 1.0;
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<double> ds;
        for (std::size_t y = 0; y < n; ++y)
            if (y != x && space.dist(x, y) > 0.0) ds.push_back(space.dist(x, y));
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        for (std::size_t i = 0; i + 1 < ds.size(); ++i)
            C = std::max(C, ds[i + 1] / ds[i]);  // r just below ds[i+1] needs the gap spanned
        if (!ds.empty() && ds.back() < diam) C = std::max(C, diam / ds.back());
    }
    return C;
}

std::vector<AntiDoublingViolation> anti_doubling_check(const Space& space, double a,
                                                       const std::vector<double>& radii_in) {
    if (a <= 0.0 || a >= 1.0) throw std::invalid_argument("anti_doubling_check: a out of (0,1)");
    std::vector<AntiDoublingViolation> out;
    if (space.size() < 2) return out;
    const auto radii = radii_in.empty() ? default_radii_grid(space) : radii_in;
    const double res = space.resolution();
    for (std::size_t x = 0; x < space.size(); ++x)
        for (double r : radii) {
            const double big = space.ball_mass(x, r, true);
            for (unsigned k = 1;; ++k) {
                const double rk = std::pow(a, k) * r;
                if (rk < res) break;
                const double lhs = space.ball_mass(x, rk, true);
                const double rhs = std::pow(1.0 - a, k) * big;
                if (lhs > rhs) out.push_back({x, r, k, lhs, rhs});
            }
        }
    return out;
}

std::vector<double> construct_doubling_measure(const Space& space) {
    const std::size_t n = space.size();
    if (n == 1) return {1.0};

    // Full farthest-point permutation from seed 0. A greedy eps-net is a
    // prefix of it (eps only moves the stopping point), so the whole
    // hierarchy falls out of one pass. insertion_dist[i] is the distance
    // of perm[i] to the earlier prefix; parent[i] is its nearest
    // earlier center.
    std::vector<std::size_t> perm{0};
    std::vector<double> insertion_dist{std::numeric_limits<double>::infinity()};
    std::vector<std::size_t> parent{0};
    std::vector<double> mind(n);
    std::vector<std::size_t> nearest(n, 0);
    for (std::size_t j = 0; j < n; ++j) mind[j] = space.dist(0, j);
    while (perm.size() < n) {
        std::size_t far = 0;
        for (std::size_t j = 1; j < n; ++j)
            if (mind[j] > mind[far]) far = j;
        perm.push_back(far);
        insertion_dist.push_back(mind[far]);
        parent.push_back(nearest[far]);
        for (std::size_t j = 0; j < n; ++j) {
            const double d = space.dist(far, j);
            if (d < mind[j]) {
                mind[j] = d;
                nearest[j] = far;
            }
        }
    }

    // prefix sizes per level: eps_k = diam * 2^-k down to resolution/2
    std::vector<std::size_t> level_sizes;
    for (double eps = space.diameter(); eps >= space.resolution() / 2.0; eps /= 2.0) {
        std::size_t sz = 1;
        while (sz < n && insertion_dist[sz] > eps) ++sz;
        level_sizes.push_back(sz);
    }
    if (level_sizes.empty() || level_sizes.back() < n) level_sizes.push_back(n);

    // equal split down the hierarchy; level masses are indexed by
    // position in perm
    std::vector<double> level_mass(n, 0.0);
    level_mass[0] = 1.0;
    std::size_t prev = 1;
    for (std::size_t sz : level_sizes) {
        if (sz == prev) continue;
        // children of each prefix center: itself plus the new entries
        // whose nearest earlier center lies in the previous prefix slot
        std::vector<std::size_t> child_count(prev, 1);
        std::vector<std::size_t> owner(n, 0);  // point id -> position in perm of parent
        std::vector<std::size_t> pos_of(n, 0);
        for (std::size_t t = 0; t < sz; ++t) pos_of[perm[t]] = t;
        for (std::size_t t = prev; t < sz; ++t) {
            // walk up to the ancestor inside the previous prefix
            std::size_t anc = parent[t];
            while (pos_of[anc] >= prev) anc = parent[pos_of[anc]];
            owner[perm[t]] = pos_of[anc];
            ++child_count[pos_of[anc]];
        }
        std::vector<double> next_mass(n, 0.0);
        for (std::size_t t = 0; t < prev; ++t)
            next_mass[t] = level_mass[t] / static_cast<double>(child_count[t]);
        for (std::size_t t = prev; t < sz; ++t) {
            const std::size_t op = owner[perm[t]];
            next_mass[t] = level_mass[op] / static_cast<double>(child_count[op]);
        }
        level_mass = next_mass;
        prev = sz;
    }

    std::vector<double> masses(n, 0.0);
    for (std::size_t t = 0; t < n; ++t) masses[perm[t]] = level_mass[t];
    return masses;
}

RegularityReport regularity_report(const Space& space, std::size_t radii_count) {
    RegularityReport rep;
    rep.radii_grid = default_radii_grid(space, radii_count);
    rep.measure_doubling_D = measure_doubling_constant(space, rep.radii_grid);
    rep.metric_doubling_D1 = metric_doubling_constant(space, rep.radii_grid);
    if (space.size() >= 2) {
        AhlforsOptions opts;
        opts.radii = rep.radii_grid;
        rep.ahlfors = ahlfors_fit(space, opts);
        rep.uniform_perfectness_C5 = uniform_perfectness(space);
    }
    return rep;
}

}  // namespace mms
