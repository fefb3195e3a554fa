#pragma once

#include "lff/matrix.hpp"

#include <vector>

namespace lff {

/// Result of a symmetric eigendecomposition: K = Q diag(lambda) Q^T with
/// eigenvalues sorted descending and orthonormal eigenvector columns.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors; // column i pairs with eigenvalues[i]
};

/// Cyclic Jacobi for symmetric matrices. Sweeps until the off-diagonal
/// Frobenius norm drops below 1e-12 * ||sym||_F, at most 100 sweeps.
/// Throws ContractViolation for non-square or asymmetric input (tolerance
/// 1e-10 relative) and NumericalError carrying the final off-diagonal norm
/// if the sweep limit is hit.
EigenDecomposition jacobi_eig(const Matrix& sym);

/// Singular values of a, descending: sqrt of the (zero-clamped) Jacobi
/// eigenvalues of a^T a.
std::vector<double> singular_values(const Matrix& a);

} // namespace lff
