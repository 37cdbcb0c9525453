#include "gse/graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace gse {

Graph Graph::from_edge_list(const std::vector<EdgeRow>& rows) {
    if (rows.empty()) throw EmptyGraph("edge list is empty");

    Graph g;
    std::unordered_map<std::string, int> index;
    auto intern = [&](const std::string& label) {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(g.labels_.size());
        index.emplace(label, id);
        g.labels_.push_back(label);
        return id;
    };

    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b, w] : rows) {
        if (a == b) throw SelfLoop("self-loop on node '" + a + "'");
        if (!(w > 0.0) || !std::isfinite(w))
            throw NonPositiveWeight("edge (" + a + "," + b + ") has non-positive weight");
        int u = intern(a);
        int v = intern(b);
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw DuplicateEdge("duplicate undirected edge (" + a + "," + b + ")");
        g.edges_.push_back({u, v, w});
    }

    g.adj_.resize(g.labels_.size());
    for (const auto& e : g.edges_) {
        g.adj_[e.u].emplace_back(e.v, e.w);
        g.adj_[e.v].emplace_back(e.u, e.w);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

int Graph::index_of(const std::string& label) const {
    for (int i = 0; i < num_nodes(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

bool Graph::connected() const {
    const int n = num_nodes();
    if (n == 0) return false;
    std::vector<char> visited(n, 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [v, w] : adj_[u]) {
            if (!visited[v]) {
                visited[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

SymMatrix affinity_matrix(const Graph& g) {
    const int n = g.num_nodes();
    Matrix w = Matrix::Zero(n, n);
    for (const auto& e : g.edges()) {
        w(e.u, e.v) = e.w;
        w(e.v, e.u) = e.w;
    }
    return SymMatrix(std::move(w), g.node_labels());
}

SymMatrix normalized_laplacian(const SymMatrix& w) {
    const int n = w.dim();
    Vector deg = w.mat().rowwise().sum();
    for (int i = 0; i < n; ++i)
        if (!(deg[i] > 0.0))
            throw IsolatedNode("node " + std::to_string(i) + " has zero degree");
    Vector dinv = deg.array().rsqrt();
    Matrix l = Matrix::Identity(n, n) -
               dinv.asDiagonal() * w.mat() * dinv.asDiagonal();
    return SymMatrix(std::move(l), w.labels());
}

}  // namespace gse
