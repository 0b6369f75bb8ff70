#pragma once

#include <cstddef>
#include <vector>

#include "mms/space.hpp"

namespace mms {

/// Log-spaced radii from the space's resolution to its diameter
/// (the default probe grid for all regularity scans).
std::vector<double> default_radii_grid(const Space& space, std::size_t count = 16);

struct AhlforsFit {
    double alpha = 0.0;
    double C0 = 1.0;       // certifies (1/C0) R^alpha <= mu(B[x,R]) <= C0 R^alpha on the grid
    double residual = 0.0; // max absolute log-deviation from the fitted power law
};

struct AhlforsOptions {
    std::vector<double> radii;         // default: default_radii_grid
    std::vector<std::size_t> centers;  // default: all points
};

struct RegularityReport {
    double measure_doubling_D = 1.0;
    long metric_doubling_D1 = 1;
    AhlforsFit ahlfors;
    double uniform_perfectness_C5 = 1.0;
    std::vector<double> radii_grid;
};

/// Max over probed (x, r) of mu(B[x,2r]) / mu(B[x,r]).
double measure_doubling_constant(const Space& space, const std::vector<double>& radii = {});

/// Max over probed (x, r) of the size of a greedy r/2-net of B[x,r]
/// (a deterministic upper-bound certificate on the covering number).
long metric_doubling_constant(const Space& space, const std::vector<double>& radii = {});

AhlforsFit ahlfors_fit(const Space& space, const AhlforsOptions& opts = {});

/// Smallest C such that every probed annulus {r/C <= d(x,.) <= r} is
/// nonempty, computed from the gap ratios of each point's sorted
/// distance list (realized scales only).
double uniform_perfectness(const Space& space);

struct AntiDoublingViolation {
    std::size_t center;
    double r;
    unsigned k;
    double lhs;  // mu(B[x, a^k r])
    double rhs;  // (1-a)^k mu(B[x, r])
};

/// Checks mu(B[x, a^k r]) <= (1-a)^k mu(B[x,r]) over the radii grid,
/// stopping k once a^k r falls below the space's resolution.
std::vector<AntiDoublingViolation> anti_doubling_check(const Space& space, double a,
                                                       const std::vector<double>& radii = {});

/// Builds a measure on a bare metric by equal mass splitting down a
/// farthest-point net hierarchy (eps_k = diam * 2^-k until below
/// resolution/2). Returns per-point masses summing to 1.
std::vector<double> construct_doubling_measure(const Space& space);

RegularityReport regularity_report(const Space& space, std::size_t radii_count = 16);

}  // namespace mms
