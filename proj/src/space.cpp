#include "mms/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

#include "mms/kernels.hpp"

namespace mms {

Space::Space(std::vector<std::string> ids, std::vector<double> dist,
             std::vector<double> mass, std::vector<std::vector<double>> coords)
    : ids_(std::move(ids)), dist_(std::move(dist)), mass_(std::move(mass)),
      coords_(std::move(coords)) {
    const std::size_t n = ids_.size();
    if (n == 0) throw std::invalid_argument("Space: empty point set");
    if (dist_.size() != n * n) throw std::invalid_argument("Space: distance matrix size mismatch");
    if (mass_.size() != n) throw std::invalid_argument("Space: mass list size mismatch");
    if (!coords_.empty() && coords_.size() != n)
        throw std::invalid_argument("Space: coordinate list size mismatch");

    resolution_ = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        if (mass_[i] < 0.0) throw std::invalid_argument("Space: negative mass");
        total_mass_ += mass_[i];
        for (std::size_t j = 0; j < n; ++j) {
            const double d = dist_[i * n + j];
            diameter_ = std::max(diameter_, d);
            if (i != j && d > 0.0) resolution_ = std::min(resolution_, d);
        }
    }
    if (n == 1) resolution_ = 0.0;
    if (total_mass_ <= 0.0) throw std::invalid_argument("Space: nonpositive total mass");
}

double Space::ball_mass(std::size_t center, double r, bool closed) const {
    if (center >= size()) throw std::invalid_argument("ball_mass: invalid center");
    if (r < 0.0) throw std::invalid_argument("ball_mass: negative radius");
    const std::size_t n = size();
    const double* row = dist_.data() + center * n;
    double m = 0.0;
    if (closed) {
        for (std::size_t j = 0; j < n; ++j)
            if (row[j] <= r) m += mass_[j];
    } else {
        for (std::size_t j = 0; j < n; ++j)
            if (row[j] < r) m += mass_[j];
    }
    return m;
}

Space build_from_points(const std::vector<std::vector<double>>& coords,
                        const std::vector<double>& masses, double metric_exponent) {
    const std::size_t n = coords.size();
    if (n == 0) throw std::invalid_argument("build_from_points: no points");
    if (metric_exponent < 1.0) throw std::invalid_argument("build_from_points: p must be >= 1");
    const std::size_t dim = coords[0].size();
    for (const auto& c : coords)
        if (c.size() != dim) throw std::invalid_argument("build_from_points: dimension mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coords[i] == coords[j])
                throw std::invalid_argument("build_from_points: duplicate points");

    std::vector<double> mass = masses;
    if (mass.empty()) mass.assign(n, 1.0);
    if (mass.size() != n) throw std::invalid_argument("build_from_points: mass count mismatch");

    std::vector<std::string> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = "p" + std::to_string(i);

    auto dist = kernels::lp_distance_matrix_parallel(coords, metric_exponent);
    return Space(std::move(ids), std::move(dist), std::move(mass), coords);
}

Space build_from_graph(const std::vector<GraphVertex>& vertices,
                       const std::vector<GraphEdge>& edges) {
    const std::size_t n = vertices.size();
    if (n == 0) throw std::invalid_argument("build_from_graph: no vertices");
    std::map<std::string, std::size_t> index;
    std::vector<std::string> ids(n);
    std::vector<double> mass(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (index.count(vertices[i].id))
            throw std::invalid_argument("build_from_graph: duplicate vertex id " + vertices[i].id);
        index[vertices[i].id] = i;
        ids[i] = vertices[i].id;
        mass[i] = vertices[i].mass;
    }
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> d(n * n, inf);
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0.0;
    for (const auto& e : edges) {
        if (e.w <= 0.0) throw std::invalid_argument("build_from_graph: nonpositive weight");
        auto iu = index.find(e.u), iv = index.find(e.v);
        if (iu == index.end() || iv == index.end())
            throw std::invalid_argument("build_from_graph: edge references unknown vertex");
        const std::size_t u = iu->second, v = iv->second;
        d[u * n + v] = std::min(d[u * n + v], e.w);
        d[v * n + u] = std::min(d[v * n + u], e.w);
    }
    kernels::apsp_floyd_warshall_parallel(d, n);
    for (double v : d)
        if (std::isinf(v)) throw std::invalid_argument("build_from_graph: disconnected graph");
    return Space(std::move(ids), std::move(d), std::move(mass));
}

ValidationReport validate(const std::vector<double>& dist, std::size_t n,
                          const std::vector<double>& masses, double tol_tri) {
    if (dist.size() != n * n) throw std::invalid_argument("validate: non-square input");
    ValidationReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i * n + i] != 0.0)
            rep.zero_distance_pairs.push_back({i, i});  // nonzero diagonal reported here
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist[i * n + j] != dist[j * n + i]) rep.symmetric = false;
            if (dist[i * n + j] <= 0.0) rep.zero_distance_pairs.push_back({i, j});
        }
    }
    for (std::size_t i = 0; i < masses.size(); ++i)
        if (masses[i] < 0.0) rep.negative_masses.push_back(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const double defect = dist[i * n + j] - dist[i * n + k] - dist[k * n + j];
                if (defect > tol_tri) rep.triangle_violations.push_back({i, j, k, defect});
            }
        }
    return rep;
}

Space build_from_matrix(const std::vector<double>& dist, std::size_t n,
                        const std::vector<double>& masses, double tol_tri,
                        std::vector<std::string> ids) {
    std::vector<double> mass = masses;
    if (mass.empty()) mass.assign(n, 1.0);
    if (tol_tri < 0.0) {
        double dmax = 0.0;
        for (double v : dist) dmax = std::max(dmax, v);
        tol_tri = 1e-9 * dmax;
    }
    auto rep = validate(dist, n, mass, tol_tri);
    if (!rep.ok()) throw std::invalid_argument("build_from_matrix: matrix fails metric validation");
    if (ids.empty()) {
        ids.resize(n);
        for (std::size_t i = 0; i < n; ++i) ids[i] = "p" + std::to_string(i);
    }
    return Space(std::move(ids), dist, std::move(mass));
}

}  // namespace mms
