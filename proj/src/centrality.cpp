#include "gse/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace gse {

namespace {

// Single-source stage of Brandes' algorithm. Fills order of settlement,
// predecessor lists and path counts sigma.
struct SsspResult {
    std::vector<int> order;                 // nodes in nondecreasing distance
    std::vector<std::vector<int>> preds;    // shortest-path predecessors
    std::vector<double> sigma;              // path multiplicities
};

SsspResult bfs_sssp(const Graph& g, int s) {
    const int n = g.num_nodes();
    SsspResult r{{}, std::vector<std::vector<int>>(n), std::vector<double>(n, 0.0)};
    std::vector<int> dist(n, -1);
    r.sigma[s] = 1.0;
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        r.order.push_back(u);
        for (const auto& [v, w] : g.adjacency()[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
            if (dist[v] == dist[u] + 1) {
                r.sigma[v] += r.sigma[u];
                r.preds[v].push_back(u);
            }
        }
    }
    return r;
}

SsspResult dijkstra_sssp(const Graph& g, int s) {
    const int n = g.num_nodes();
    constexpr double kInf = std::numeric_limits<double>::infinity();
    // relative tolerance for equal-length path detection
    constexpr double kTieRel = 1e-12;
    SsspResult r{{}, std::vector<std::vector<int>>(n), std::vector<double>(n, 0.0)};
    std::vector<double> dist(n, kInf);
    std::vector<char> done(n, 0);
    r.sigma[s] = 1.0;
    dist[s] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.emplace(0.0, s);
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (done[u]) continue;
        done[u] = 1;
        r.order.push_back(u);
        for (const auto& [v, w] : g.adjacency()[u]) {
            double nd = d + w;
            double tol = kTieRel * std::max(1.0, nd);
            if (nd < dist[v] - tol) {
                dist[v] = nd;
                r.sigma[v] = r.sigma[u];
                r.preds[v].assign(1, u);
                pq.emplace(nd, v);
            } else if (std::abs(nd - dist[v]) <= tol) {
                r.sigma[v] += r.sigma[u];
                r.preds[v].push_back(u);
            }
        }
    }
    return r;
}

}  // namespace

std::map<EdgeKey, double> edge_betweenness(const Graph& g, PathMetric metric) {
    const int n = g.num_nodes();
    std::map<EdgeKey, double> bc;
    for (const auto& e : g.edges()) bc[edge_key(e.u, e.v)] = 0.0;

    // sources in ascending index order for deterministic accumulation
    for (int s = 0; s < n; ++s) {
        SsspResult r = metric == PathMetric::Hops ? bfs_sssp(g, s)
                                                  : dijkstra_sssp(g, s);
        std::vector<double> delta(n, 0.0);
        for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
            int v = *it;
            std::sort(r.preds[v].begin(), r.preds[v].end());
            for (int u : r.preds[v]) {
                double contrib = r.sigma[u] / r.sigma[v] * (1.0 + delta[v]);
                bc[edge_key(u, v)] += contrib;
                delta[u] += contrib;
            }
        }
    }
    // Brandes over all sources counts each ordered (s,t) pair once, which
    // is exactly the ordered-pair sum; no halving.
    return bc;
}

CentralityGraph build_centrality_graph(const Graph& g, PathMetric metric) {
    auto ebc = edge_betweenness(g, metric);
    const int n = g.num_nodes();
    Matrix w = Matrix::Zero(n, n);
    for (const auto& [key, value] : ebc) {
        if (!(value > 0.0))
            throw ZeroCentralityEdge(
                "edge (" + g.node_labels()[key.first] + "," +
                g.node_labels()[key.second] + ") has zero centrality");
        w(key.first, key.second) = value;
        w(key.second, key.first) = value;
    }
    SymMatrix w_be(std::move(w), g.node_labels());
    SymMatrix l_be = normalized_laplacian(w_be);
    return CentralityGraph{g, std::move(ebc), std::move(w_be), std::move(l_be)};
}

}  // namespace gse
