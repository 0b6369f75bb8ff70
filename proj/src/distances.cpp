#include "mms/distances.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "mms/flow.hpp"

namespace mms {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_measure(const Space& space, const DiscreteMeasure& m, const char* who) {
    if (m.weights.size() != space.size())
        throw std::invalid_argument(std::string(who) + ": measure/space size mismatch");
    if (!m.normalized) throw std::invalid_argument(std::string(who) + ": measure not normalized");
}

std::vector<std::size_t> support(const DiscreteMeasure& m) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m.weights.size(); ++i)
        if (m.weights[i] > 0.0) s.push_back(i);
    return s;
}

}  // namespace

DiscreteMeasure make_probability_measure(std::vector<double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("make_probability_measure: negative weight");
        total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("make_probability_measure: zero total mass");
    for (double& w : weights) w /= total;
    return DiscreteMeasure{std::move(weights), true};
}

DistanceResult hausdorff(const Space& space, const std::vector<std::size_t>& A,
                         const std::vector<std::size_t>& B) {
    if (A.empty() || B.empty()) throw std::invalid_argument("hausdorff: empty set");
    auto one_sided = [&](const std::vector<std::size_t>& from,
                         const std::vector<std::size_t>& to) {
        double worst = 0.0;
        for (std::size_t a : from) {
            double best = kInf;
            for (std::size_t b : to) best = std::min(best, space.dist(a, b));
            worst = std::max(worst, best);
        }
        return worst;
    };
    DistanceResult res;
    res.value = std::max(one_sided(A, B), one_sided(B, A));
    res.method = "exact";
    return res;
}

namespace {

// Strassen feasibility at level r: a coupling of (mu, nu) moving at
// most r mass across pairs with d > r exists iff the d <= r bipartite
// max flow carries at least 1 - r.
bool strassen_feasible(const Space& space, const std::vector<std::size_t>& sup_mu,
                       const std::vector<std::size_t>& sup_nu, const DiscreteMeasure& mu,
                       const DiscreteMeasure& nu, double r, Coupling* coupling_out) {
    const std::size_t n = sup_mu.size(), m = sup_nu.size();
    flow::MaxFlow mf(n + m + 2);
    const std::size_t S = n + m, T = n + m + 1;
    for (std::size_t i = 0; i < n; ++i) mf.add_edge(S, i, mu.weights[sup_mu[i]]);
    for (std::size_t j = 0; j < m; ++j) mf.add_edge(n + j, T, nu.weights[sup_nu[j]]);
    std::vector<std::size_t> mid_edges;
    std::vector<std::pair<std::size_t, std::size_t>> mid_pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (space.dist(sup_mu[i], sup_nu[j]) <= r) {
                mid_edges.push_back(mf.add_edge(i, n + j, 2.0));
                mid_pairs.push_back({i, j});
            }
    const double f = mf.run(S, T);
    const bool ok = f >= 1.0 - r - 1e-12;
    if (ok && coupling_out) {
        Coupling c;
        c.rows = n;
        c.cols = m;
        c.plan.assign(n * m, 0.0);
        std::vector<double> row_left(n), col_left(m);
        for (std::size_t i = 0; i < n; ++i) row_left[i] = mu.weights[sup_mu[i]];
        for (std::size_t j = 0; j < m; ++j) col_left[j] = nu.weights[sup_nu[j]];
        for (std::size_t e = 0; e < mid_edges.size(); ++e) {
            const double fl = mf.flow_on(mid_edges[e]);
            const auto [i, j] = mid_pairs[e];
            c.plan[i * m + j] += fl;
            row_left[i] -= fl;
            col_left[j] -= fl;
        }
        // complete the leftover (<= r) mass into a full coupling
        std::size_t i = 0, j = 0;
        while (i < n && j < m) {
            if (row_left[i] <= 1e-15) { ++i; continue; }
            if (col_left[j] <= 1e-15) { ++j; continue; }
            const double t = std::min(row_left[i], col_left[j]);
            c.plan[i * m + j] += t;
            row_left[i] -= t;
            col_left[j] -= t;
        }
        *coupling_out = std::move(c);
    }
    return ok;
}

}  // namespace

DistanceResult prokhorov(const Space& space, const DiscreteMeasure& mu,
                         const DiscreteMeasure& nu, double tol) {
    check_measure(space, mu, "prokhorov");
    check_measure(space, nu, "prokhorov");
    if (tol <= 0.0) tol = 1e-6 * std::max(1.0, space.diameter());
    const auto sup_mu = support(mu), sup_nu = support(nu);

    double lo = 0.0, hi = std::max(space.diameter(), 1.0);
    if (strassen_feasible(space, sup_mu, sup_nu, mu, nu, 0.0, nullptr)) hi = 0.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (strassen_feasible(space, sup_mu, sup_nu, mu, nu, mid, nullptr))
            hi = mid;
        else
            lo = mid;
    }
    DistanceResult res;
    res.value = hi;
    res.method = "binary_search";
    res.tolerance = tol;
    Coupling c;
    if (strassen_feasible(space, sup_mu, sup_nu, mu, nu, hi + tol, &c)) res.coupling = std::move(c);
    return res;
}

DistanceResult prokhorov_bruteforce(const Space& space, const DiscreteMeasure& mu,
                                    const DiscreteMeasure& nu, double tol) {
    check_measure(space, mu, "prokhorov_bruteforce");
    check_measure(space, nu, "prokhorov_bruteforce");
    const std::size_t n = space.size();
    if (n > 10) throw size_guard_error("prokhorov_bruteforce: more than 10 points");
    if (tol <= 0.0) tol = 1e-6 * std::max(1.0, space.diameter());

    auto feasible = [&](double r) {
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            double muF = 0.0, nuF = 0.0, muN = 0.0, nuN = 0.0;
            for (std::size_t y = 0; y < n; ++y) {
                bool in_nbhd = false;
                for (std::size_t x = 0; x < n; ++x)
                    if ((mask >> x) & 1 && space.dist(x, y) <= r) { in_nbhd = true; break; }
                if ((mask >> y) & 1) { muF += mu.weights[y]; nuF += nu.weights[y]; }
                if (in_nbhd) { muN += mu.weights[y]; nuN += nu.weights[y]; }
            }
            if (muF > nuN + r + 1e-12 || nuF > muN + r + 1e-12) return false;
        }
        return true;
    };

    double lo = 0.0, hi = std::max(space.diameter(), 1.0);
    if (feasible(0.0)) hi = 0.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid)) hi = mid; else lo = mid;
    }
    DistanceResult res;
    res.value = hi;
    res.method = "brute_force";
    res.tolerance = tol;
    return res;
}

DistanceResult wasserstein2(const Space& space, const DiscreteMeasure& mu,
                            const DiscreteMeasure& nu) {
    check_measure(space, mu, "wasserstein2");
    check_measure(space, nu, "wasserstein2");
    const auto sup_mu = support(mu), sup_nu = support(nu);
    const std::size_t n = sup_mu.size(), m = sup_nu.size();
    std::vector<double> supply(n), demand(m), cost(n * m);
    for (std::size_t i = 0; i < n; ++i) supply[i] = mu.weights[sup_mu[i]];
    for (std::size_t j = 0; j < m; ++j) demand[j] = nu.weights[sup_nu[j]];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double d = space.dist(sup_mu[i], sup_nu[j]);
            cost[i * m + j] = d * d;
        }
    double total = 0.0;
    auto plan = flow::transportation(supply, demand, cost, &total);
    DistanceResult res;
    res.value = std::sqrt(std::max(0.0, total));
    res.method = "exact";
    res.coupling = Coupling{std::move(plan), n, m};
    return res;
}

DistanceResult ghp_common(const Space& space, const DiscreteMeasure& mu,
                          const DiscreteMeasure& nu) {
    check_measure(space, mu, "ghp_common");
    check_measure(space, nu, "ghp_common");
    const auto h = hausdorff(space, support(mu), support(nu));
    const auto p = prokhorov(space, mu, nu);
    DistanceResult res;
    res.value = h.value + p.value;
    res.method = "upper_bound";
    res.tolerance = p.tolerance;
    return res;
}

namespace {

// Is there a correspondence whose additive distortion stays <= t?
// Backtracking over slots: first every x picks a partner, then every
// still-uncovered y does.
bool gh_feasible(const Space& X, const Space& Y, double t,
                 std::vector<std::pair<std::size_t, std::size_t>>* out) {
    const std::size_t nx = X.size(), ny = Y.size();
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    std::vector<bool> y_covered(ny, false);

    std::function<bool(std::size_t)> assign_x = [&](std::size_t x) -> bool {
        if (x == nx) {
            // cover remaining ys
            std::function<bool(std::size_t)> assign_y = [&](std::size_t y) -> bool {
                while (y < ny && y_covered[y]) ++y;
                if (y == ny) return true;
                for (std::size_t xx = 0; xx < nx; ++xx) {
                    bool ok = true;
                    for (const auto& [a, b] : chosen)
                        if (std::fabs(X.dist(xx, a) - Y.dist(y, b)) > t + 1e-12) { ok = false; break; }
                    if (!ok) continue;
                    chosen.push_back({xx, y});
                    y_covered[y] = true;
                    if (assign_y(y + 1)) return true;
                    y_covered[y] = false;
                    chosen.pop_back();
                }
                return false;
            };
            return assign_y(0);
        }
        for (std::size_t y = 0; y < ny; ++y) {
            bool ok = true;
            for (const auto& [a, b] : chosen)
                if (std::fabs(X.dist(x, a) - Y.dist(y, b)) > t + 1e-12) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back({x, y});
            const bool was = y_covered[y];
            y_covered[y] = true;
            if (assign_x(x + 1)) return true;
            y_covered[y] = was;
            chosen.pop_back();
        }
        return false;
    };

    if (!assign_x(0)) return false;
    if (out) *out = chosen;
    return true;
}

}  // namespace

DistanceResult gromov_hausdorff_bruteforce(const Space& spaceX, const Space& spaceY) {
    const std::size_t nx = spaceX.size(), ny = spaceY.size();
    if (nx + ny > 14) throw size_guard_error("gromov_hausdorff_bruteforce: |X| + |Y| > 14");

    // candidate distortions: all |d_X - d_Y| over pair-of-pairs
    std::vector<double> cands{0.0};
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t k = 0; k < nx; ++k)
            for (std::size_t j = 0; j < ny; ++j)
                for (std::size_t l = 0; l < ny; ++l)
                    cands.push_back(std::fabs(spaceX.dist(i, k) - spaceY.dist(j, l)));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    std::size_t lo = 0, hi = cands.size() - 1;  // hi is always feasible
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (gh_feasible(spaceX, spaceY, cands[mid], nullptr)) hi = mid; else lo = mid + 1;
    }
    DistanceResult res;
    res.value = cands[lo] / 2.0;
    res.method = "brute_force";
    std::vector<std::pair<std::size_t, std::size_t>> corr;
    gh_feasible(spaceX, spaceY, cands[lo], &corr);
    res.correspondence = std::move(corr);
    return res;
}

}  // namespace mms
