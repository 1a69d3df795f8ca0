#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "minneg/bipartite.hpp"
#include "minneg/rng.hpp"

namespace minneg {

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Witness decomposition of a separable state: sum_i weights[i] * a_i (x) b_i
/// with nonnegative weights summing to one and each factor a valid one-qubit
/// density matrix.
struct SeparableEnsemble {
    std::vector<double> weights;
    std::vector<std::pair<Mat2, Mat2>> factors;  // (a_i, b_i)
};

struct SeparableSample {
    DensityMatrix state;
    SeparableEnsemble ensemble;
};

/// Rank-1 projector onto the chosen Bell vector in the computational basis.
DensityMatrix bell_state(BellKind kind);

/// p * |Psi-><Psi-| + (1-p) * I/4. Separable iff p <= 1/3; negativity
/// max(0, (3p-1)/4). Throws InvalidParameterError unless 0 <= p <= 1.
DensityMatrix werner_state(double p);

/// a (x) b for two valid one-qubit density matrices (Hermitian, unit trace,
/// det >= -1e-12); guaranteed separable.
DensityMatrix product_state(const Mat2& a, const Mat2& b);

/// Haar-random pure one-qubit density matrix (uniform on the Bloch sphere).
Mat2 random_pure_qubit(Rng& rng);

/// Convex combination of n_terms random pure product states with flat-simplex
/// weights, together with its witness ensemble. Always separable; its partial
/// transpose is again a state.
SeparableSample random_separable(int n_terms, Rng& rng);
SeparableSample random_separable(int n_terms, std::uint64_t seed);

/// Ginibre construction G G^dag / Tr(G G^dag): a random full-rank two-qubit
/// density matrix, deterministic per seed.
DensityMatrix random_density(Rng& rng);
DensityMatrix random_density(std::uint64_t seed);

/// U (x) V with U, V Haar-random in SU(2); unitary within 1e-12.
Mat4 random_local_unitary(Rng& rng);
Mat4 random_local_unitary(std::uint64_t seed);

}  // namespace minneg
