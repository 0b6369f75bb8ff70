#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mms/space.hpp"

namespace mms {

/// Bishop-Gromov model density S_K^N(t):
///   (sin(sqrt(K/(N-1)) t))^{N-1}   K > 0   (t up to the conjugate radius)
///   t^{N-1}                        K = 0
///   (sinh(sqrt(|K|/(N-1)) t))^{N-1} K < 0
double s_profile(double K, double N, double t);

/// For K > 0, the largest admissible t: pi * sqrt((N-1)/K).
double conjugate_radius(double K, double N);

/// Integral of S_K^N over [0,r]: closed form for integer N, adaptive
/// quadrature (abs tol 1e-10) otherwise.
double volume_profile(double K, double N, double r);

struct BGViolation {
    std::size_t center;
    double r_small, r_large;
    double ratio_small, ratio_large;
};

struct BGReport {
    std::vector<BGViolation> violations;
    double tolerance = 0.0;
};

struct BGOptions {
    std::vector<double> radii;          // default: 16 log-spaced, resolution..diameter
    std::vector<std::size_t> centers;   // default: all points
};

/// Monotonicity test of mass(B[x,r]) / volume_profile(K,N,r) along the
/// radii grid. A violation is recorded when the ratio at the larger
/// radius exceeds the ratio at the smaller one by more than the
/// relative tolerance.
BGReport bishop_gromov_test(const Space& space, double K, double N, double tolerance,
                            const BGOptions& opts = {});

/// n1 = floor( volume_profile(K,N,D) / volume_profile(K,N,eps/2) ).
long net_cardinality_bound(double K, double N, double D, double epsilon);

/// n2(eps) = ceil( volume_profile(K,N,9eps/2) / volume_profile(K,N,eps/2) ).
long intersection_degree_bound(double K, double N, double epsilon);

/// The eps-uniform variant: ceil of the max of h over a log grid of
/// eps in (0, 2D/9].
long intersection_degree_bound_uniform(double K, double N, double D,
                                       std::size_t grid_size = 64);

/// n3 = 2*(n' - 1) with n' = ceil( volume_profile(K,N,(4k+1)eps/2) /
/// volume_profile(K,N,eps/2) ), k = ceil(C).
long same_pattern_bound(double K, double N, double C, double epsilon);

struct BoundsReport {
    long n1, n2, n3;
    double epsilon;
    double C;
};

BoundsReport bounds_report(double K, double N, double D, double epsilon, double C = 1.0);

/// Reference distortion coefficient beta_t^{(K,N)}(d). Pass
/// N = infinity for the exponential branch; that branch is exponent-
/// linear in d as printed, or in d^2 when squared_distance_exponent is
/// set. Returns +infinity for K > 0 beyond the cutoff.
double distortion_coefficient(double K, double N, double t, double d,
                              bool squared_distance_exponent = false);

/// A scalar field sampled on a uniform grid over R^n (row-major, last
/// axis fastest).
struct ScalarField {
    std::vector<double> values;
    std::vector<std::size_t> shape;
    double spacing;
};

/// Minimum eigenvalue of Hess V - (grad V (x) grad V)/(N_eff - n) at an
/// interior grid point (the rank-one term is dropped at N_eff =
/// infinity). On flat R^n the ambient Ricci term is zero, so this is
/// the best pointwise K for CD(K, N_eff).
double weighted_euclidean_ricci(const ScalarField& V, double N_eff,
                                const std::vector<std::size_t>& query);

struct CdAhlforsBound {
    double C2;            // sup over (0,D] of volume_profile / r^N
    std::string c1_note;  // the lower constant depends on mu(X); see empirical fit
};

CdAhlforsBound cd_ahlfors_bound(double K, double N, double D, std::size_t grid_size = 256);

/// Empirical analogue of the lower Ahlfors constant: min over probed
/// (x, r) of mass(B[x,r]) / r^N.
double cd_ahlfors_empirical_C1(const Space& space, double N,
                               const std::vector<double>& radii);

}  // namespace mms
