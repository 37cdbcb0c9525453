#include "gse/sylvester.hpp"

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

namespace gse {

SylvesterProblem SylvesterProblem::identity_rhs(SymMatrix a, SymMatrix b,
                                                double tau) {
    if (a.dim() != b.dim())
        throw Error("Sylvester factors must share dimension");
    SymMatrix c(Matrix::Identity(a.dim(), a.dim()));
    return SylvesterProblem{std::move(a), std::move(b), std::move(c), tau};
}

double solvability_margin(const EigenSystem& ea, const EigenSystem& eb) {
    double margin = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < ea.values.size(); ++i)
        for (Eigen::Index j = 0; j < eb.values.size(); ++j)
            margin = std::min(margin, std::abs(ea.values[i] * eb.values[j] - 1.0));
    return margin;
}

Matrix solve_analytical(const SylvesterProblem& p) {
    if (p.a.dim() != p.b.dim() || p.a.dim() != p.c.dim())
        throw Error("Sylvester problem dimension mismatch");
    EigenSystem ea = sym_eig(p.a);
    EigenSystem eb = sym_eig(p.b);
    double margin = solvability_margin(ea, eb);
    if (margin <= p.tau)
        throw NearSingularPencil("solvability margin " + std::to_string(margin) +
                                 " below tolerance");
    Matrix ctilde = ea.vectors.transpose() * p.c.mat() * eb.vectors;
    for (Eigen::Index i = 0; i < ctilde.rows(); ++i)
        for (Eigen::Index j = 0; j < ctilde.cols(); ++j)
            ctilde(i, j) /= ea.values[i] * eb.values[j] - 1.0;
    return ea.vectors * ctilde * eb.vectors.transpose();
}

Matrix solve_kronecker_oracle(const SylvesterProblem& p) {
    const int n = p.a.dim();
    if (n > 60) throw Error("Kronecker oracle limited to dim <= 60");
    // vec(A X B - X) = (B^T (x) A - I) vec(X)
    Matrix big = Eigen::kroneckerProduct(p.b.mat().transpose(), p.a.mat());
    big -= Matrix::Identity(n * n, n * n);
    Vector c = Eigen::Map<const Vector>(p.c.mat().data(), n * n);
    Vector x = dense_solve(big, c);
    return Eigen::Map<const Matrix>(x.data(), n, n);
}

double stein_residual(const SylvesterProblem& p, const Matrix& x) {
    return (p.a.mat() * x * p.b.mat() - x - p.c.mat()).norm();
}

double permutation_equivariance_residual(const SylvesterProblem& p,
                                         const std::vector<int>& perm) {
    const int n = p.a.dim();
    if (static_cast<int>(perm.size()) != n)
        throw Error("permutation size mismatch");
    Matrix pm = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) pm(perm[i], i) = 1.0;

    Matrix x = solve_analytical(p);
    SylvesterProblem q{
        SymMatrix(pm.transpose() * p.a.mat() * pm),
        SymMatrix(pm.transpose() * p.b.mat() * pm),
        SymMatrix(pm.transpose() * p.c.mat() * pm), p.tau};
    Matrix xt = solve_analytical(q);
    return (xt - pm.transpose() * x * pm).cwiseAbs().maxCoeff();
}

double polynomial_identity_residual(const SylvesterProblem& p, int k) {
    if (k < 1) throw Error("polynomial identity requires k >= 1");
    Matrix x = solve_analytical(p);
    const int n = p.a.dim();
    // A^k X B^k - X = sum_{i<k} A^i C B^i; k = 1 is the defining equation
    Matrix ak = Matrix::Identity(n, n);
    Matrix bk = Matrix::Identity(n, n);
    Matrix rhs = Matrix::Zero(n, n);
    for (int i = 0; i < k; ++i) {
        rhs += ak * p.c.mat() * bk;
        ak = ak * p.a.mat();
        bk = bk * p.b.mat();
    }
    return (ak * x * bk - x - rhs).cwiseAbs().maxCoeff();
}

}  // namespace gse
