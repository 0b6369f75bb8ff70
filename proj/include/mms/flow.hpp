#pragma once

#include <cstddef>
#include <vector>

// Small dense-graph flow solvers used by the measure distances:
// Dinic max-flow for Strassen coupling feasibility, successive
// shortest paths for exact optimal transport.

namespace mms::flow {

class MaxFlow {
public:
    explicit MaxFlow(std::size_t node_count);
    /// Adds a directed edge, returns its index (for flow readback).
    std::size_t add_edge(std::size_t from, std::size_t to, double capacity);
    double run(std::size_t source, std::size_t sink);
    double flow_on(std::size_t edge_index) const;

private:
    struct Edge {
        std::size_t to;
        double cap;
        std::size_t rev;
    };
    bool bfs(std::size_t s, std::size_t t);
    double dfs(std::size_t v, std::size_t t, double pushed);

    std::vector<std::vector<Edge>> adj_;
    std::vector<std::pair<std::size_t, std::size_t>> edge_ref_;  // (node, slot)
    std::vector<double> initial_cap_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
};

/// Exact transportation problem: minimize sum_{ij} plan[i][j]*cost[i][j]
/// subject to row sums = supply, column sums = demand (equal totals).
/// Costs must be nonnegative. Returns the optimal plan (row-major).
std::vector<double> transportation(const std::vector<double>& supply,
                                   const std::vector<double>& demand,
                                   const std::vector<double>& cost,  // supply.size() x demand.size()
                                   double* total_cost = nullptr);

}  // namespace mms::flow
