#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "gse/errors.hpp"

namespace gse {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Square symmetric real matrix with optional node labels on both axes.
// Symmetrized on construction; entries must be finite.
class SymMatrix {
public:
    explicit SymMatrix(Matrix m, std::vector<std::string> labels = {})
        : labels_(std::move(labels)) {
        if (m.rows() != m.cols() || m.rows() == 0)
            throw Error("SymMatrix requires a nonempty square matrix");
        if (!m.allFinite())
            throw Error("SymMatrix entries must be finite");
        if (!labels_.empty() && static_cast<Eigen::Index>(labels_.size()) != m.rows())
            throw Error("axis label count does not match dimension");
        m_ = 0.5 * (m + m.transpose());
    }

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& mat() const { return m_; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    Matrix m_;
    std::vector<std::string> labels_;
};

}  // namespace gse
