#include "mms/nets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mms/snowflake.hpp"

namespace mms {

namespace {

// Argmax of vals with lowest-index tie-break. The parallel combine is
// order-independent: strictly-greater value wins, equal value keeps the
// lower index.
std::size_t argmax_lowest(const std::vector<double>& vals) {
    std::size_t best = 0;
    double bv = vals[0];
#pragma omp parallel
    {
        std::size_t lb = 0;
        double lv = -std::numeric_limits<double>::infinity();
#pragma omp for nowait
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(vals.size()); ++i) {
            const std::size_t ii = static_cast<std::size_t>(i);
            if (vals[ii] > lv || (vals[ii] == lv && ii < lb)) {
                lv = vals[ii];
                lb = ii;
            }
        }
#pragma omp critical
        {
            if (lv > bv || (lv == bv && lb < best)) {
                bv = lv;
                best = lb;
            }
        }
    }
    return best;
}

Net greedy_net(const std::vector<double>& values, std::size_t n, double epsilon,
               std::size_t seed_index) {
    if (epsilon <= 0.0) throw std::invalid_argument("minimal_epsilon_net: nonpositive epsilon");
    if (seed_index >= n) throw std::invalid_argument("minimal_epsilon_net: invalid seed");

    Net net;
    net.epsilon = epsilon;
    net.centers.push_back(seed_index);
    std::vector<double> mind(n);
    for (std::size_t j = 0; j < n; ++j) mind[j] = values[seed_index * n + j];

    for (;;) {
        const std::size_t far = argmax_lowest(mind);
        if (mind[far] <= epsilon) {
            net.covering_radius = mind[far];
            break;
        }
        net.centers.push_back(far);
        for (std::size_t j = 0; j < n; ++j) mind[j] = std::min(mind[j], values[far * n + j]);
    }

    net.separation = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < net.centers.size(); ++a)
        for (std::size_t b = a + 1; b < net.centers.size(); ++b)
            net.separation =
                std::min(net.separation, values[net.centers[a] * n + net.centers[b]]);
    return net;
}

}  // namespace

Net minimal_epsilon_net(const Space& space, double epsilon, std::size_t seed_index) {
    return greedy_net(space.dist_matrix(), space.size(), epsilon, seed_index);
}

Net minimal_epsilon_net_matrix(const std::vector<double>& values, std::size_t n,
                               double epsilon, std::size_t seed_index) {
    return greedy_net(values, n, epsilon, seed_index);
}

IntersectionPattern intersection_pattern(const Space& space, const Net& net) {
    const std::size_t n = space.size();
    IntersectionPattern pat;
    for (std::size_t a = 0; a < net.centers.size(); ++a)
        for (std::size_t b = a + 1; b < net.centers.size(); ++b) {
            const double* ra = space.dist_matrix().data() + net.centers[a] * n;
            const double* rb = space.dist_matrix().data() + net.centers[b] * n;
            for (std::size_t x = 0; x < n; ++x)
                if (ra[x] <= net.epsilon && rb[x] <= net.epsilon) {
                    pat.edges.push_back({a, b});
                    break;
                }
        }
    return pat;
}

std::size_t covering_order(const Space& space, const Net& net) {
    const std::size_t n = space.size();
    std::size_t order = 0;
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t c = 0;
        for (std::size_t k : net.centers)
            if (space.dist(x, k) <= net.epsilon) ++c;
        order = std::max(order, c);
    }
    return order;
}

namespace {

double covering_radius_against(const std::vector<double>& values, std::size_t n,
                               const std::vector<std::size_t>& centers) {
    double cov = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t c : centers) m = std::min(m, values[c * n + x]);
        cov = std::max(cov, m);
    }
    return cov;
}

}  // namespace

NetEquivalenceReport net_equivalence_check(const Space& space, double s, double epsilon,
                                           double ahlfors_alpha, double ahlfors_C0) {
    if (s <= 0.0 || epsilon <= 0.0 || ahlfors_alpha <= 0.0 || ahlfors_C0 < 1.0)
        throw std::invalid_argument("net_equivalence_check: parameters out of range");
    if (space.total_mass() <= 0.0)
        throw std::invalid_argument("net_equivalence_check: degenerate measure");

    NetEquivalenceReport rep;
    if (space.size() == 1) {
        rep.holds = true;
        return rep;
    }

    const std::size_t n = space.size();
    const auto q = quasimetric_q(space, s, QVariant::general);
    const double c_star = std::pow(2.0, ahlfors_alpha) * std::pow(ahlfors_C0, ahlfors_alpha);
    const double sa = s * ahlfors_alpha;

    // d-eps-net must be a q-net at scale C* eps^{s*alpha}.
    const Net dnet = minimal_epsilon_net(space, epsilon, 0);
    const double q_cov = covering_radius_against(q.values, n, dnet.centers);
    rep.forward_constant = q_cov / std::pow(epsilon, sa);
    const bool forward_ok = rep.forward_constant <= c_star;

    // q-eps-net must be a d-net at the inverse scale.
    const Net qnet = minimal_epsilon_net_matrix(q.values, n, epsilon, 0);
    const double d_cov = covering_radius_against(space.dist_matrix(), n, qnet.centers);
    rep.backward_constant = d_cov / std::pow(epsilon, 1.0 / sa);
    const bool backward_ok = rep.backward_constant <= std::pow(c_star, 1.0 / sa);

    rep.holds = forward_ok && backward_ok;
    return rep;
}

}  // namespace mms
