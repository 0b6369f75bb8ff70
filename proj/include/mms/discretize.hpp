#pragma once

#include <map>
#include <vector>

#include "mms/nets.hpp"
#include "mms/space.hpp"

namespace mms {

/// Voronoi (Dirichlet) partition of a space relative to a net; each
/// cell's mass is collapsed onto its center.
struct Discretization {
    Net net;
    std::map<std::size_t, std::vector<std::size_t>> cells;  // center index -> member points
    std::vector<double> atomic_masses;                      // per center, in net order
};

/// Nerve of the closed eps-ball cover: a k-tuple of centers spans a
/// (k-1)-simplex iff the k balls share a witness point.
struct NerveComplex {
    std::vector<std::size_t> vertices;  // center positions 0..m-1
    std::vector<std::vector<std::vector<std::size_t>>> simplices_by_dim;  // [dim][simplex]
};

/// Nearest-center assignment, ties to the lowest-index center.
Discretization voronoi_discretize(const Space& space, const Net& net);

struct DiscretizationStep {
    Discretization discretization;
    double w2_to_original;
};

/// For each epsilon (strictly decreasing) builds a net + discretization
/// and reports W2 between the normalized atomic measure and the
/// normalized original measure.
std::vector<DiscretizationStep> discretization_sequence(const Space& space,
                                                        const std::vector<double>& epsilons,
                                                        std::size_t seed_index = 0);

NerveComplex nerve_complex(const Space& space, const Net& net, std::size_t max_dim = 3);

struct CoveringMeshReport {
    double mesh;        // max realized ball diameter, capped at 2*eps
    std::size_t order;  // covering order of the net
};

CoveringMeshReport covering_mesh_report(const Space& space, const Net& net);

}  // namespace mms
