#pragma once

#include "gse/matrix.hpp"

namespace gse {

// Eigendecomposition of a symmetric matrix, eigenvalues ascending.
// Columns of `vectors` are unit eigenvectors; the largest-magnitude entry
// of each column is positive so output is deterministic.
struct EigenSystem {
    Vector values;
    Matrix vectors;
};

// Singular values descending, same sign convention applied to U columns
// (V columns flipped in tandem so U S V^T still reconstructs).
struct SvdSystem {
    Vector singular_values;
    Matrix U;
    Matrix V;
};

EigenSystem sym_eig(const SymMatrix& a);
SvdSystem svd(const Matrix& x);

// Solves a x = b; rejects singular or badly conditioned systems
// (condition estimate above ~1e12).
Vector dense_solve(const Matrix& a, const Vector& b);

}  // namespace gse
