#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mms/space.hpp"

namespace mms {

/// A measure supported on the points of a space.
struct DiscreteMeasure {
    std::vector<double> weights;
    bool normalized = false;
};

/// Weights summing to 1 (throws on nonpositive total).
DiscreteMeasure make_probability_measure(std::vector<double> weights);

struct Coupling {
    std::vector<double> plan;  // row-major rows x cols
    std::size_t rows = 0, cols = 0;
};

struct DistanceResult {
    double value = 0.0;
    std::string method;  // exact | binary_search | brute_force | upper_bound
    double tolerance = 0.0;
    std::optional<Coupling> coupling;
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> correspondence;
};

/// Hausdorff distance between two nonempty index sets, in the standard
/// max-min neighborhood form.
DistanceResult hausdorff(const Space& space, const std::vector<std::size_t>& A,
                         const std::vector<std::size_t>& B);

/// Prokhorov distance via binary search on r with Strassen coupling
/// feasibility decided by max-flow on the d <= r bipartite graph.
DistanceResult prokhorov(const Space& space, const DiscreteMeasure& mu,
                         const DiscreteMeasure& nu, double tol = -1.0);

/// Subset-enumeration oracle for the Prokhorov distance (2^n checks per
/// feasibility probe). Guarded to n <= 10 points.
DistanceResult prokhorov_bruteforce(const Space& space, const DiscreteMeasure& mu,
                                    const DiscreteMeasure& nu, double tol = -1.0);

/// Exact Wasserstein-2 via the transportation problem with squared
/// distances; certificate is the optimal coupling.
DistanceResult wasserstein2(const Space& space, const DiscreteMeasure& mu,
                            const DiscreteMeasure& nu);

/// d_H(supp mu, supp nu) + d_P(mu, nu) for one common embedding — an
/// upper bound on the Gromov-Hausdorff-Prokhorov distance.
DistanceResult ghp_common(const Space& space, const DiscreteMeasure& mu,
                          const DiscreteMeasure& nu);

/// Exact Gromov-Hausdorff distance by correspondence search. Guarded to
/// |X| + |Y| <= 14.
DistanceResult gromov_hausdorff_bruteforce(const Space& spaceX, const Space& spaceY);

}  // namespace mms
