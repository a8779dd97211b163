#pragma once

#include <vector>

#include "qbfac/dense_matrix.hpp"
#include "qbfac/types.hpp"

namespace qbfac {

struct QrResult {
    DenseMatrix q;  // m x n, orthonormal columns
    DenseMatrix r;  // n x n, upper triangular, non-negative diagonal
};

/// Economic Householder QR (rows >= cols). The diagonal of R is forced
/// non-negative so the factorization is unique and runs are comparable
/// across algorithms.
QrResult orth_qr(const DenseMatrix& m);

/// Indices j with |R(j,j)| <= threshold * max_j |R(j,j)|, ascending.
std::vector<index> rank_deficiency_report(const DenseMatrix& r, double threshold = 1e-12);

/// Solves R^T X = C for upper-triangular R. Throws SingularityError naming
/// the first diagonal at or below threshold * max diagonal.
DenseMatrix tri_solve_transposed(const DenseMatrix& r, const DenseMatrix& c,
                                 double threshold = 1e-12);

/// ||Q^T Q - I||_inf (max absolute row sum).
double orthogonality_loss(const DenseMatrix& q);

}  // namespace qbfac
