#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gse/graph.hpp"
#include "gse/matrix.hpp"

namespace gse {

// One edge per line: `u v [w]` (w defaults to 1.0); '#' lines and blank
// lines are ignored. Throws ParseError with a line number on bad input.
std::vector<Graph::EdgeRow> read_edge_list(std::istream& in);
std::vector<Graph::EdgeRow> read_edge_list_file(const std::string& path);

// TSV `label_a label_b` pairs (anchors, ground truth, failed edges).
std::vector<std::pair<std::string, std::string>> read_pair_file(const std::string& path);

// CSV `node,s1,...,sK` with 17 significant digits.
void write_embedding_csv(std::ostream& out, const Matrix& emb,
                         const std::vector<std::string>& row_labels);

}  // namespace gse
