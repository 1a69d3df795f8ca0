#pragma once

#include <array>

#include "minneg/bipartite.hpp"
#include "minneg/negativity.hpp"

namespace minneg {

struct EigenDecomposition {
    std::array<double, 4> eigenvalues;  // ascending
    double max_offdiag_residual;        // recomputed from the final rotated matrix
};

/// Eigenvalues of a 4x4 Hermitian matrix by cyclic complex Jacobi rotations,
/// swept until the largest off-diagonal magnitude falls below 1e-12 (at most
/// 100 sweeps, then NoConvergenceError). Shares no determinant or
/// root-finding code with the minor pipeline.
EigenDecomposition eigvalsh4(const Mat4& h);

/// Trace-norm negativity: (sum |lambda_i| - 1)/2 over the eigenvalues of the
/// partial transpose of rho, cross-checked against the sum of the negative
/// eigenvalues.
NegativityReport negativity_eigen(const DensityMatrix& rho);

}  // namespace minneg
