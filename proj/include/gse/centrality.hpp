#pragma once

#include <map>
#include <utility>

#include "gse/graph.hpp"

namespace gse {

enum class PathMetric {
    Hops,             // every edge counts 1
    WeightedDistance  // edge weight is the distance (Dijkstra)
};

using EdgeKey = std::pair<int, int>;  // (min, max) endpoint indices

inline EdgeKey edge_key(int u, int v) {
    return u < v ? EdgeKey{u, v} : EdgeKey{v, u};
}

// Edge betweenness centrality over ordered source/target pairs s != t,
// i.e. 2x the unordered Brandes convention on undirected graphs.
// Unreachable pairs contribute zero.
std::map<EdgeKey, double> edge_betweenness(const Graph& g,
                                           PathMetric metric = PathMetric::Hops);

// Centrality graph: same connectivity, edges reweighted by their EBC.
struct CentralityGraph {
    Graph base;
    std::map<EdgeKey, double> ebc;
    SymMatrix w_be;
    SymMatrix l_be;
};

CentralityGraph build_centrality_graph(const Graph& g,
                                       PathMetric metric = PathMetric::Hops);

}  // namespace gse
