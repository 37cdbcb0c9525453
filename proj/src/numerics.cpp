#include "gse/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace gse {

namespace {

// Flip each column so its largest-magnitude entry is positive; ties go to
// the lowest row index.
void fix_signs(Matrix& m, Matrix* paired = nullptr) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            double a = std::abs(m(i, j));
            if (a > best) {
                best = a;
                imax = i;
            }
        }
        if (m(imax, j) < 0.0) {
            m.col(j) = -m.col(j);
            if (paired) paired->col(j) = -paired->col(j);
        }
    }
}

}  // namespace

EigenSystem sym_eig(const SymMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat());
    if (es.info() != Eigen::Success)
        throw ConvergenceFailure("symmetric eigensolver failed");
    EigenSystem sys{es.eigenvalues(), es.eigenvectors()};
    fix_signs(sys.vectors);
    return sys;
}

SvdSystem svd(const Matrix& x) {
    if (!x.allFinite()) throw Error("svd input must be finite");
    Eigen::BDCSVD<Matrix> s(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (s.info() != Eigen::Success)
        throw ConvergenceFailure("SVD failed to converge");
    SvdSystem sys{s.singularValues(), s.matrixU(), s.matrixV()};
    fix_signs(sys.U, &sys.V);
    return sys;
}

Vector dense_solve(const Matrix& a, const Vector& b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw Error("dense_solve dimension mismatch");
    Eigen::PartialPivLU<Matrix> lu(a);
    double rcond = lu.rcond();
    if (!(rcond > 0.0) || !std::isfinite(rcond))
        throw SingularSystem("matrix is singular");
    if (rcond < 1e-12)
        throw IllConditioned("condition estimate exceeds 1e12");
    Vector x = lu.solve(b);
    double resid = (a * x - b).norm();
    if (resid > 1e-8 * (a.norm() * x.norm() + b.norm()))
        throw ConvergenceFailure("linear solve residual out of contract");
    return x;
}

}  // namespace gse
