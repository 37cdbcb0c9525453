#pragma once

#include <vector>

#include "gse/matrix.hpp"
#include "gse/numerics.hpp"

namespace gse {

// Discrete-time Sylvester (Stein) equation A X B - X = C with symmetric
// A, B. Solvable iff no eigenvalue product lambda_i^A * lambda_j^B is 1.
struct SylvesterProblem {
    SymMatrix a;
    SymMatrix b;
    SymMatrix c;
    double tau = 1e-8;  // minimum solvability margin

    static SylvesterProblem identity_rhs(SymMatrix a, SymMatrix b,
                                         double tau = 1e-8);
};

// min over (i,j) of |lambda_i^A * lambda_j^B - 1|
double solvability_margin(const EigenSystem& ea, const EigenSystem& eb);

// Closed-form solve via the two eigendecompositions:
// X = Phi_A Ctilde Phi_B^T, Ctilde_ij = (Phi_A^T C Phi_B)_ij / (l_i l_j - 1).
Matrix solve_analytical(const SylvesterProblem& p);

// Small-scale reference: solves (B^T (x) A - I) vec(X) = vec(C) densely.
Matrix solve_kronecker_oracle(const SylvesterProblem& p);

// max-abs mismatch between the solution of the permuted problem and
// P^T X P (Proposition: equivariance under simultaneous permutation).
double permutation_equivariance_residual(const SylvesterProblem& p,
                                         const std::vector<int>& perm);

// max-abs residual of A^k X B^k - X = sum_{i<k} A^i C B^i, the k-step
// power form of the defining equation (k = 1 reduces to it exactly).
double polynomial_identity_residual(const SylvesterProblem& p, int k);

double stein_residual(const SylvesterProblem& p, const Matrix& x);

}  // namespace gse
