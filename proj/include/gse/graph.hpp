#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "gse/matrix.hpp"

namespace gse {

struct Edge {
    int u;
    int v;
    double w;
};

// Undirected weighted graph with stable node indexing (first-appearance
// order of labels). No self-loops, no duplicate edges, positive weights.
class Graph {
public:
    using EdgeRow = std::tuple<std::string, std::string, double>;

    static Graph from_edge_list(const std::vector<EdgeRow>& rows);

    int num_nodes() const { return static_cast<int>(labels_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& node_labels() const { return labels_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // -1 if the label is unknown
    int index_of(const std::string& label) const;

    // neighbor lists, sorted by neighbor index
    const std::vector<std::vector<std::pair<int, double>>>& adjacency() const {
        return adj_;
    }

    bool connected() const;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, double>>> adj_;
};

SymMatrix affinity_matrix(const Graph& g);

// I - D^{-1/2} W D^{-1/2}; requires strictly positive degrees.
SymMatrix normalized_laplacian(const SymMatrix& w);

}  // namespace gse
