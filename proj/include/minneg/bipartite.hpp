#pragma once

#include "minneg/mat.hpp"

namespace minneg {

/// One of the two tensor factors of the C2 (x) C2 space.
enum class Subsystem { A, B };

/// Absolute tolerance for the density-matrix invariants (Hermiticity, unit
/// trace, positivity of principal minors).
inline constexpr double kDensityTol = 1e-10;

/// Kronecker product: out(2m+mu, 2n+nu) = a(m,n) * b(mu,nu).
Mat4 kron(const Mat2& a, const Mat2& b);

/// Partial transpose. Side A swaps the off-diagonal 2x2 blocks leaving inner
/// indices untouched; side B transposes each 2x2 block in place. A pure index
/// permutation: involutive and exactly trace preserving.
Mat4 partial_transpose(const Mat4& g, Subsystem side);

/// Traces out `traced`, returning the reduced 2x2 matrix of the other factor.
Mat2 partial_trace(const Mat4& g, Subsystem traced);

/// A 4x4 matrix that passed validation: Hermitian and unit trace within
/// 1e-10, and all 15 principal minors >= -1e-10 (Sylvester PSD check).
/// Immutable once constructed.
class DensityMatrix {
public:
    const Mat4& matrix() const { return m_; }

private:
    friend DensityMatrix validate_density(const Mat4& g);
    explicit DensityMatrix(const Mat4& m) : m_(m) {}
    Mat4 m_;
};

/// Checks the three density-matrix invariants and wraps the matrix.
/// Throws NotFiniteError, NotHermitianError, TraceNotOneError or NotPsdError,
/// each naming the offending quantity.
DensityMatrix validate_density(const Mat4& g);

}  // namespace minneg
