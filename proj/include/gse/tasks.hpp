#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gse/centrality.hpp"
#include "gse/embedding.hpp"
#include "gse/graph.hpp"

namespace gse {

enum class Distance { Euclidean, Cosine };

struct TaskReport {
    std::map<std::string, double> metrics;
    std::vector<int> cluster_labels;                       // detect_failures
    std::vector<std::pair<std::string, std::string>> matches;  // align
    std::uint64_t seed = 0;
    std::vector<std::string> warnings;
};

struct AlignmentProblem {
    Graph g1;
    Graph g2;
    std::vector<std::pair<int, int>> anchors;  // (node in g1, node in g2)
    std::optional<std::vector<std::pair<int, int>>> ground_truth;
    double anchor_weight = 1.0;
};

struct FailureProblem {
    Graph g;
    std::set<EdgeKey> failed_edges;
};

// Joins the two graphs with one anchor edge per pair, embeds the union
// with GSE, and matches every non-anchor g1 node to its nearest g2 node.
TaskReport align(const AlignmentProblem& p, const DescriptorConfig& cfg,
                 Distance metric = Distance::Euclidean,
                 PathMetric path_metric = PathMetric::Hops);

// Edge embeddings -> kNN similarity graph -> 2-way spectral clustering;
// the cluster with the larger mean EBC is predicted failed.
TaskReport detect_failures(const FailureProblem& p, const DescriptorConfig& cfg,
                           int knn = 10, std::uint64_t seed = 0,
                           PathMetric path_metric = PathMetric::Hops);

// Normalized-cut bipartition: sign structure of the Fiedler vector of the
// normalized Laplacian of `sim`, refined by seeded 2-means on that vector.
std::vector<int> spectral_cluster_2(const SymMatrix& sim, std::uint64_t seed);

// Upper-tail P(X >= observed) of the hypergeometric distribution,
// computed in log space.
double hypergeom_pvalue(std::int64_t population, std::int64_t successes,
                        std::int64_t draws, std::int64_t observed);
double hypergeom_pmf(std::int64_t population, std::int64_t successes,
                     std::int64_t draws, std::int64_t observed);

// kNN graph with Gaussian weights exp(-d^2 / 2h^2), h = median kNN
// distance; symmetrized by max.
SymMatrix knn_similarity(const Matrix& points, int knn);

}  // namespace gse
