#include "mms/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mms/distances.hpp"

namespace mms {

Discretization voronoi_discretize(const Space& space, const Net& net) {
    if (net.centers.empty()) throw std::invalid_argument("voronoi_discretize: empty net");
    Discretization d;
    d.net = net;
    d.atomic_masses.assign(net.centers.size(), 0.0);
    for (std::size_t c : net.centers) d.cells[c];  // keep empty cells present
    for (std::size_t x = 0; x < space.size(); ++x) {
        std::size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < net.centers.size(); ++k) {
            const double dd = space.dist(x, net.centers[k]);
            if (dd < bd || (dd == bd && net.centers[k] < net.centers[best])) {
                bd = dd;
                best = k;
            }
        }
        d.cells[net.centers[best]].push_back(x);
        d.atomic_masses[best] += space.masses()[x];
    }
    return d;
}

std::vector<DiscretizationStep> discretization_sequence(const Space& space,
                                                        const std::vector<double>& epsilons,
                                                        std::size_t seed_index) {
    for (std::size_t i = 0; i + 1 < epsilons.size(); ++i)
        if (epsilons[i + 1] >= epsilons[i])
            throw std::invalid_argument("discretization_sequence: epsilons must strictly decrease");

    DiscreteMeasure original = make_probability_measure(space.masses());
    std::vector<DiscretizationStep> steps;
    for (double eps : epsilons) {
        DiscretizationStep step;
        const Net net = minimal_epsilon_net(space, eps, seed_index);
        step.discretization = voronoi_discretize(space, net);
        std::vector<double> atomic(space.size(), 0.0);
        for (std::size_t k = 0; k < net.centers.size(); ++k)
            atomic[net.centers[k]] = step.discretization.atomic_masses[k];
        step.w2_to_original =
            wasserstein2(space, make_probability_measure(std::move(atomic)), original).value;
        steps.push_back(std::move(step));
    }
    return steps;
}

namespace {

bool has_common_witness(const Space& space, const Net& net,
                        const std::vector<std::size_t>& tuple) {
    const std::size_t n = space.size();
    for (std::size_t x = 0; x < n; ++x) {
        bool all = true;
        for (std::size_t k : tuple)
            if (space.dist(x, net.centers[k]) > net.epsilon) { all = false; break; }
        if (all) return true;
    }
    return false;
}

}  // namespace

NerveComplex nerve_complex(const Space& space, const Net& net, std::size_t max_dim) {
    if (max_dim < 1) throw std::invalid_argument("nerve_complex: max_dim must be >= 1");
    NerveComplex nc;
    const std::size_t m = net.centers.size();
    for (std::size_t k = 0; k < m; ++k) nc.vertices.push_back(k);

    // dim 0: vertices as singleton simplices
    nc.simplices_by_dim.push_back({});
    for (std::size_t k = 0; k < m; ++k) nc.simplices_by_dim[0].push_back({k});

    // grow dimension by extending existing simplices with a higher
    // vertex; a face of any witness-backed simplex is witness-backed,
    // so downward closure holds by construction
    for (std::size_t dim = 1; dim <= max_dim; ++dim) {
        std::vector<std::vector<std::size_t>> level;
        for (const auto& simplex : nc.simplices_by_dim[dim - 1])
            for (std::size_t next = simplex.back() + 1; next < m; ++next) {
                std::vector<std::size_t> cand = simplex;
                cand.push_back(next);
                if (has_common_witness(space, net, cand)) level.push_back(std::move(cand));
            }
        const bool done = level.empty();
        nc.simplices_by_dim.push_back(std::move(level));
        if (done) break;  // higher levels are empty too; keep [dim] valid
    }
    return nc;
}

CoveringMeshReport covering_mesh_report(const Space& space, const Net& net) {
    CoveringMeshReport rep{0.0, covering_order(space, net)};
    for (std::size_t c : net.centers) {
        double reach = 0.0;
        for (std::size_t x = 0; x < space.size(); ++x)
            if (space.dist(c, x) <= net.epsilon) reach = std::max(reach, space.dist(c, x));
        rep.mesh = std::max(rep.mesh, std::min(2.0 * reach, 2.0 * net.epsilon));
    }
    return rep;
}

}  // namespace mms
