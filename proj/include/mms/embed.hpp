#pragma once

#include <cstddef>
#include <vector>

#include "mms/space.hpp"

namespace mms {

struct EmbeddingResult {
    std::vector<std::vector<double>> coords;
    std::size_t N = 0;
    double distortion_L = 1.0;  // after optimal uniform scaling
    double scale = 1.0;         // the scaling equalizing over/under-stretch
    std::size_t iterations = 0;
    bool converged = false;
};

struct EmbedOptions {
    std::size_t max_iters = 3000;
    std::size_t restarts = 8;
    double grad_tol = 1e-8;
};

/// Bilipschitz distortion of an embedding against target pairwise
/// values: with r_xy = |f(x)-f(y)| / target(x,y), L = max r / min r and
/// scale = 1/sqrt(max r * min r). Coincident images of distinct points
/// yield L = infinity.
std::pair<double, double> distortion(const std::vector<double>& target, std::size_t n,
                                     const std::vector<std::vector<double>>& coords);

/// Minimizes the log-stress sum of log^2(|f(x)-f(y)| / d^eps(x,y)) by
/// gradient descent with backtracking line search from seeded random
/// starts; keeps the best restart by exact distortion.
EmbeddingResult embed_snowflake(const Space& space, double snowflake_eps, std::size_t N,
                                unsigned seed, const EmbedOptions& opts = {});

/// Same optimizer against an arbitrary symmetric target matrix.
EmbeddingResult embed_target(const std::vector<double>& target, std::size_t n, std::size_t N,
                             unsigned seed, const EmbedOptions& opts = {});

/// Log-stress value and gradient at a configuration (exposed for the
/// finite-difference gradient check).
double log_stress(const std::vector<double>& target, std::size_t n,
                  const std::vector<std::vector<double>>& coords,
                  std::vector<std::vector<double>>* grad = nullptr);

struct EmbeddingBudget {
    double N_bound;  // a * log(D)
    double L_bound;  // b * (log(D)/eps)^2
    double a, b;
    double doubling_D;
    double epsilon;
};

/// Quantitative Assouad-type budget with user-supplied leading
/// constants (natural log).
EmbeddingBudget naor_naiman_budget(double doubling_D, double epsilon, double a = 1.0,
                                   double b = 1.0);

}  // namespace mms
