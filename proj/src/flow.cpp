#include "mms/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace mms::flow {

namespace {
constexpr double kEps = 1e-14;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

MaxFlow::MaxFlow(std::size_t node_count) : adj_(node_count) {}

std::size_t MaxFlow::add_edge(std::size_t from, std::size_t to, double capacity) {
    edge_ref_.push_back({from, adj_[from].size()});
    initial_cap_.push_back(capacity);
    adj_[from].push_back({to, capacity, adj_[to].size()});
    adj_[to].push_back({from, 0.0, adj_[from].size() - 1});
    return edge_ref_.size() - 1;
}

bool MaxFlow::bfs(std::size_t s, std::size_t t) {
    level_.assign(adj_.size(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        for (const Edge& e : adj_[v])
            if (e.cap > kEps && level_[e.to] < 0) {
                level_[e.to] = level_[v] + 1;
                q.push(e.to);
            }
    }
    return level_[t] >= 0;
}

double MaxFlow::dfs(std::size_t v, std::size_t t, double pushed) {
    if (v == t) return pushed;
    for (std::size_t& i = iter_[v]; i < adj_[v].size(); ++i) {
        Edge& e = adj_[v][i];
        if (e.cap > kEps && level_[e.to] == level_[v] + 1) {
            const double d = dfs(e.to, t, std::min(pushed, e.cap));
            if (d > kEps) {
                e.cap -= d;
                adj_[e.to][e.rev].cap += d;
                return d;
            }
        }
    }
    return 0.0;
}

double MaxFlow::run(std::size_t source, std::size_t sink) {
    double total = 0.0;
    while (bfs(source, sink)) {
        iter_.assign(adj_.size(), 0);
        for (;;) {
            const double f = dfs(source, sink, kInf);
            if (f <= kEps) break;
            total += f;
        }
    }
    return total;
}

double MaxFlow::flow_on(std::size_t edge_index) const {
    const auto& [node, slot] = edge_ref_[edge_index];
    return initial_cap_[edge_index] - adj_[node][slot].cap;
}

std::vector<double> transportation(const std::vector<double>& supply,
                                   const std::vector<double>& demand,
                                   const std::vector<double>& cost, double* total_cost) {
    const std::size_t n = supply.size(), m = demand.size();
    if (cost.size() != n * m) throw std::invalid_argument("transportation: cost size mismatch");

    // Successive shortest paths with potentials on the bipartite graph
    // source -> i -> j -> sink. Middle arcs are uncapacitated, so each
    // augmentation saturates a source or sink arc: at most n+m rounds.
    const std::size_t S = n + m, T = n + m + 1, V = n + m + 2;
    std::vector<double> rem_supply = supply, rem_demand = demand;
    std::vector<double> plan(n * m, 0.0);
    std::vector<double> pot(V, 0.0);
    if (total_cost) *total_cost = 0.0;

    for (;;) {
        double pending = 0.0;
        for (double s : rem_supply) pending += s;
        if (pending <= 1e-12) break;

        // Dijkstra over reduced costs
        std::vector<double> dist(V, kInf);
        std::vector<int> prev(V, -1);  // for i nodes: -2 means from source; for j: source i index
        std::vector<bool> done(V, false);
        using QE = std::pair<double, std::size_t>;
        std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
        dist[S] = 0.0;
        pq.push({0.0, S});
        while (!pq.empty()) {
            const auto [dv, v] = pq.top();
            pq.pop();
            if (done[v]) continue;
            done[v] = true;
            auto relax = [&](std::size_t u, double w, int p) {
                const double rc = std::max(0.0, w + pot[v] - pot[u]);
                if (dv + rc < dist[u]) {
                    dist[u] = dv + rc;
                    prev[u] = p;
                    pq.push({dist[u], u});
                }
            };
            if (v == S) {
                for (std::size_t i = 0; i < n; ++i)
                    if (rem_supply[i] > 1e-15) relax(i, 0.0, -2);
            } else if (v < n) {
                for (std::size_t j = 0; j < m; ++j) relax(n + j, cost[v * m + j], static_cast<int>(v));
            } else if (v < n + m) {
                const std::size_t j = v - n;
                if (rem_demand[j] > 1e-15) relax(T, 0.0, static_cast<int>(v));
                // residual arcs j -> i where plan[i][j] > 0
                for (std::size_t i = 0; i < n; ++i)
                    if (plan[i * m + j] > 1e-15) relax(i, -cost[i * m + j], static_cast<int>(v));
            }
        }
        if (!done[T]) throw std::runtime_error("transportation: no augmenting path");
        for (std::size_t v = 0; v < V; ++v)
            if (dist[v] < kInf) pot[v] += dist[v];

        // reconstruct path T <- ... <- S and find bottleneck
        std::vector<std::size_t> path;  // node sequence from S to T
        {
            std::size_t v = T;
            std::vector<std::size_t> rev;
            while (v != S) {
                rev.push_back(v);
                const int p = prev[v];
                if (p == -2) { rev.push_back(S); break; }
                v = static_cast<std::size_t>(p);
                if (v == static_cast<std::size_t>(-1)) throw std::runtime_error("transportation: bad path");
            }
            path.assign(rev.rbegin(), rev.rend());
        }
        double bottleneck = kInf;
        for (std::size_t t = 0; t + 1 < path.size(); ++t) {
            const std::size_t a = path[t], b = path[t + 1];
            if (a == S) bottleneck = std::min(bottleneck, rem_supply[b]);
            else if (b == T) bottleneck = std::min(bottleneck, rem_demand[a - n]);
            else if (a >= n && b < n)  // residual arc j -> i
                bottleneck = std::min(bottleneck, plan[b * m + (a - n)]);
        }
        for (std::size_t t = 0; t + 1 < path.size(); ++t) {
            const std::size_t a = path[t], b = path[t + 1];
            if (a == S) rem_supply[b] -= bottleneck;
            else if (b == T) rem_demand[a - n] -= bottleneck;
            else if (a < n && b >= n) plan[a * m + (b - n)] += bottleneck;
            else plan[b * m + (a - n)] -= bottleneck;
        }
    }

    if (total_cost) {
        double tc = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) tc += plan[i * m + j] * cost[i * m + j];
        *total_cost = tc;
    }
    return plan;
}

}  // namespace mms::flow
