#pragma once

#include <array>
#include <vector>

#include "minneg/bipartite.hpp"
#include "minneg/negativity.hpp"

namespace minneg {

/// The 15 principal minors of a 4x4 Hermitian matrix. Within each order the
/// index subsets are enumerated lexicographically:
///   order 2: {0,1} {0,2} {0,3} {1,2} {1,3} {2,3}
///   order 3: {0,1,2} {0,1,3} {0,2,3} {1,2,3}
/// so order1[l-1] is m1_l, order2[l-1] is m2_l, and so on.
struct MinorSet {
    std::array<double, 4> order1;
    std::array<double, 6> order2;
    std::array<double, 4> order3;
    double order4;
};

/// Coefficients of the characteristic polynomial
///   x^4 - s1 x^3 + s2 x^2 - s3 x + s4,
/// where s_k is the sum of all order-k principal minors. s1 equals the trace
/// and s4 the determinant of the source matrix.
struct CharPolyCoefficients {
    double s1;
    double s2;
    double s3;
    double s4;
};

struct NegativeMinor {
    int order;     // 1..4
    int index;     // 1-based position within the order (the l of mk_l)
    double value;  // the computed minor, < -tolerance
};

struct SeparabilityVerdict {
    bool separable;  // true iff negative_minors is empty
    std::vector<NegativeMinor> negative_minors;
    double tolerance;
};

/// All 15 principal minors of h, which must be Hermitian within 1e-10
/// (throws NotHermitianError otherwise). Determinants are evaluated by
/// cofactor expansion on the Hermitian part of h, so every minor is real up
/// to a residue below 1e-12.
MinorSet principal_minors(const Mat4& h);

/// Sums the minors of each order.
CharPolyCoefficients minor_sums(const MinorSet& m);

/// The four real roots of x^4 - s1 x^3 + s2 x^2 - s3 x + s4, ascending, with
/// multiplicity. Closed-form Ferrari resolution followed by Newton polishing;
/// throws ResidualTooLargeError if any polished root evaluates above 1e-10 in
/// magnitude, which signals coefficients that did not come from a Hermitian
/// matrix.
std::array<double, 4> quartic_real_roots(const CharPolyCoefficients& c);

/// Sylvester separability test on a partial transpose: the state is separable
/// iff every principal minor of pt is >= -tol. Lists each violating minor.
SeparabilityVerdict sylvester_separable(const Mat4& pt, double tol = 1e-10);

/// Negativity through the minor pipeline: partial transpose over A, principal
/// minors, characteristic-polynomial coefficients, quartic roots, then
/// max(0, -smallest root).
NegativityReport negativity_minors(const DensityMatrix& rho);

/// |sum of the strictly negative principal minors| of pt. A diagnostic only:
/// unlike the negativity this quantity is NOT an entanglement measure.
double negative_minor_sum(const Mat4& pt);

}  // namespace minneg
