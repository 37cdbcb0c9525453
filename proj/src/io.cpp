#include "gse/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gse/errors.hpp"

namespace gse {

std::vector<Graph::EdgeRow> read_edge_list(std::istream& in) {
    std::vector<Graph::EdgeRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string a, b, wtok;
        if (!(ss >> a)) continue;          // blank line
        if (a[0] == '#') continue;         // comment
        if (!(ss >> b)) throw ParseError("expected two node labels", lineno);
        double w = 1.0;
        if (ss >> wtok) {
            std::size_t pos = 0;
            try {
                w = std::stod(wtok, &pos);
            } catch (const std::exception&) {
                throw ParseError("bad weight '" + wtok + "'", lineno);
            }
            if (pos != wtok.size())
                throw ParseError("bad weight '" + wtok + "'", lineno);
        }
        std::string extra;
        if (ss >> extra) throw ParseError("trailing token '" + extra + "'", lineno);
        rows.emplace_back(a, b, w);
    }
    return rows;
}

std::vector<Graph::EdgeRow> read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_edge_list(in);
}

std::vector<std::pair<std::string, std::string>> read_pair_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string a, b;
        if (!(ss >> a)) continue;
        if (a[0] == '#') continue;
        if (!(ss >> b)) throw ParseError("expected two labels", lineno);
        pairs.emplace_back(a, b);
    }
    return pairs;
}

void write_embedding_csv(std::ostream& out, const Matrix& emb,
                         const std::vector<std::string>& row_labels) {
    out << "node";
    for (Eigen::Index j = 0; j < emb.cols(); ++j) out << ",s" << (j + 1);
    out << '\n';
    char buf[32];
    for (Eigen::Index i = 0; i < emb.rows(); ++i) {
        out << row_labels[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < emb.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", emb(i, j));
            out << ',' << buf;
        }
        out << '\n';
    }
}

}  // namespace gse
