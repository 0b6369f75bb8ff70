#pragma once

#include <utility>
#include <vector>

#include "mms/space.hpp"

namespace mms {

/// A minimal epsilon-net: the centers cover the space by closed
/// eps-balls and are pairwise more than eps apart (so their closed
/// eps/2-balls are disjoint).
struct Net {
    double epsilon = 0.0;
    std::vector<std::size_t> centers;
    double covering_radius = 0.0;  // max over points of distance to nearest center
    double separation = 0.0;       // min pairwise center distance (inf for one center)
};

/// Unordered pairs (k,l) of net-center positions whose closed eps-balls
/// share at least one witness point of the space.
struct IntersectionPattern {
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted, k < l
};

/// Greedy farthest-point net: start from seed_index, repeatedly add the
/// point farthest from the chosen set (lowest index on ties) while that
/// distance exceeds epsilon. Deterministic.
Net minimal_epsilon_net(const Space& space, double epsilon, std::size_t seed_index);

/// Same construction against an arbitrary symmetric nonnegative
/// dissimilarity matrix (used for q_{mu,s}-nets).
Net minimal_epsilon_net_matrix(const std::vector<double>& values, std::size_t n,
                               double epsilon, std::size_t seed_index);

IntersectionPattern intersection_pattern(const Space& space, const Net& net);

/// Max over points of the number of closed eps-balls of the net
/// containing it.
std::size_t covering_order(const Space& space, const Net& net);

struct NetEquivalenceReport {
    double forward_constant = 0.0;   // q-covering radius of the d-net / eps^{s*alpha}
    double backward_constant = 0.0;  // d-covering radius of the q-net / eps^{1/(s*alpha)}
    bool holds = false;
};

/// Finite-scale check of the equivalence between d-nets and
/// q_{mu,s}-nets on an Ahlfors (alpha, C0)-regular space. Forward
/// budget is C* = 2^alpha * C0^alpha applied at scale eps^{s*alpha};
/// the backward direction uses the inverse scaling with the same
/// budget.
NetEquivalenceReport net_equivalence_check(const Space& space, double s, double epsilon,
                                           double ahlfors_alpha, double ahlfors_C0);

}  // namespace mms
