#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace mms {

/// Thrown when an input exceeds a hard size guard (e.g. brute-force
/// Gromov-Hausdorff on spaces that are too large to enumerate).
class size_guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite metric measure space: point ids, a dense symmetric distance
/// matrix, and per-point masses. Immutable after construction; safe to
/// share across threads.
class Space {
public:
    Space(std::vector<std::string> ids,
          std::vector<double> dist,      // row-major n*n
          std::vector<double> mass,
          std::vector<std::vector<double>> coords = {});  // optional, one tuple per point

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::vector<double>& dist_matrix() const { return dist_; }
    const std::vector<double>& masses() const { return mass_; }
    const std::vector<std::vector<double>>& coords() const { return coords_; }
    bool has_coords() const { return !coords_.empty(); }

    double dist(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }
    double diameter() const { return diameter_; }
    double total_mass() const { return total_mass_; }
    /// Smallest positive pairwise distance (0 for a singleton).
    double resolution() const { return resolution_; }

    /// Total mass of the closed ball B[center,r] (d <= r) or the open
    /// ball (d < r). Throws on negative r or invalid center.
    double ball_mass(std::size_t center, double r, bool closed = true) const;

private:
    std::vector<std::string> ids_;
    std::vector<double> dist_;
    std::vector<double> mass_;
    std::vector<std::vector<double>> coords_;
    double diameter_ = 0.0;
    double total_mass_ = 0.0;
    double resolution_ = 0.0;
};

struct TriangleViolation {
    std::size_t i, j, k;
    double defect;  // dist(i,j) - dist(i,k) - dist(k,j), positive when violated
};

struct ValidationReport {
    bool symmetric = true;
    std::vector<TriangleViolation> triangle_violations;
    std::vector<std::pair<std::size_t, std::size_t>> zero_distance_pairs;
    std::vector<std::size_t> negative_masses;

    bool ok() const {
        return symmetric && triangle_violations.empty() &&
               zero_distance_pairs.empty() && negative_masses.empty();
    }
};

/// Build from coordinate tuples with the l_p metric (p >= 1). Default
/// masses are all 1. Duplicate tuples are rejected.
Space build_from_points(const std::vector<std::vector<double>>& coords,
                        const std::vector<double>& masses = {},
                        double metric_exponent = 2.0);

struct GraphVertex {
    std::string id;
    double mass;
};
struct GraphEdge {
    std::string u, v;
    double w;
};

/// Build from a connected weighted graph; distances are all-pairs
/// shortest paths.
Space build_from_graph(const std::vector<GraphVertex>& vertices,
                       const std::vector<GraphEdge>& edges);

/// Check a raw square matrix + masses against the metric axioms.
/// tol_tri is the absolute slack allowed on triangle defects.
ValidationReport validate(const std::vector<double>& dist, std::size_t n,
                          const std::vector<double>& masses, double tol_tri);

/// Build from a raw matrix; accepts only matrices whose validation
/// report is clean at tol_tri (default 1e-9 * max entry).
Space build_from_matrix(const std::vector<double>& dist, std::size_t n,
                        const std::vector<double>& masses = {},
                        double tol_tri = -1.0,
                        std::vector<std::string> ids = {});

}  // namespace mms
