#pragma once

#include <cstddef>
#include <vector>

// Hot inner loops, each in two variants: a serial reference and an
// OpenMP-parallel version. The parallel versions are bit-identical to
// the serial ones (elementwise work or order-independent min/max
// reductions); tests and the benchmark target compare them.

namespace mms::kernels {

/// Row-major n*n l_p distance matrix from coordinate tuples.
std::vector<double> lp_distance_matrix_serial(
    const std::vector<std::vector<double>>& coords, double p);
std::vector<double> lp_distance_matrix_parallel(
    const std::vector<std::vector<double>>& coords, double p);

/// In-place Floyd-Warshall all-pairs shortest-path closure.
void apsp_floyd_warshall_serial(std::vector<double>& d, std::size_t n);
void apsp_floyd_warshall_parallel(std::vector<double>& d, std::size_t n);

/// Smallest K >= 1 with q(x,y) <= K*(q(x,z)+q(z,y)) over all triples of
/// distinct indices. Throws std::invalid_argument on a zero
/// off-diagonal entry.
double quasimetric_constant_serial(const std::vector<double>& q, std::size_t n);
double quasimetric_constant_parallel(const std::vector<double>& q, std::size_t n);

}  // namespace mms::kernels
