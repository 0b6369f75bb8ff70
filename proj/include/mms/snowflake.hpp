#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mms/space.hpp"

namespace mms {

enum class QVariant { general, euclidean_midpoint, plain_snowflake };

/// Symmetric quasimetric values with zero diagonal, their snowflake
/// exponent and the exact quasimetric constant over all triples.
struct QuasimetricMatrix {
    std::vector<double> values;  // row-major n*n
    std::size_t n = 0;
    double s = 0.0;
    double quasi_constant_K = 1.0;
    QVariant variant = QVariant::general;

    double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

/// Single-pair evaluation of the measure quasimetric:
///   general:            (mu(B[x,d]) + mu(B[y,d]))^s with d = d(x,y)
///   euclidean_midpoint: (mu(B[m, d/2]))^s, m the coordinate midpoint
///   plain_snowflake:    d(x,y)^s
/// The diagonal is forced to 0 (atomic spaces would otherwise give
/// (2*mass)^s at x = y).
double quasimetric_q_pair(const Space& space, std::size_t i, std::size_t j, double s,
                          QVariant variant);

QuasimetricMatrix quasimetric_q(const Space& space, double s, QVariant variant);

/// Exact max over ordered triples of q(x,y)/(q(x,z)+q(z,y)), clamped
/// below at 1. Throws on a zero off-diagonal entry.
double quasimetric_constant(const std::vector<double>& values, std::size_t n);

struct ChainMetricResult {
    std::vector<double> metric;  // shortest-path closure, a true metric
    std::size_t n = 0;
    double max_ratio = 1.0;      // max over pairs of q/metric
    double min_ratio = 1.0;      // min over pairs of metric/q (<= 1)
    double bilipschitz_C = 1.0;  // = max_ratio, to compare against (2K)^{2s}
};

/// Thrown when the shortest-path closure of a quasimetric collapses a
/// pair to distance 0 (the snowflake exponent was too large).
class chain_collapse_error : public std::runtime_error {
public:
    chain_collapse_error(std::size_t i, std::size_t j)
        : std::runtime_error("chain_metric: metric collapse at pair (" + std::to_string(i) +
                             "," + std::to_string(j) + ")"),
          i(i), j(j) {}
    std::size_t i, j;
};

ChainMetricResult chain_metric(const QuasimetricMatrix& q);

/// Empirical quasisymmetry modulus of the map spaceX[i] -> spaceY[bijection[i]]:
/// buckets t = d_X(x,a)/d_X(x,b) over all distinct triples into a
/// log-spaced grid and records the max image ratio per bucket.
std::vector<std::pair<double, double>> empirical_quasisymmetry(
    const Space& spaceX, const Space& spaceY, const std::vector<std::size_t>& bijection,
    std::size_t buckets_per_decade = 8);

}  // namespace mms
