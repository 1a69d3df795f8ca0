#include "minneg/eigen_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace minneg {

namespace {

double max_offdiag(const Mat4& a) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) worst = std::max(worst, std::abs(a(i, j)));
    return worst;
}

// Annihilates a(p,q) with the unitary that diagonalizes the (p,q) principal
// block: the block's phase is absorbed first, then a real rotation with the
// smaller-angle tangent is applied.
void rotate(Mat4& a, int p, int q) {
    const Complex gamma = a(p, q);
    const double g = std::abs(gamma);
    if (g == 0.0) return;

    const Complex phase = gamma / g;
    const double alpha = a(p, p).real();
    const double beta = a(q, q).real();
    const double tau = (beta - alpha) / (2.0 * g);
    const double sgn = tau >= 0.0 ? 1.0 : -1.0;
    const double t = -sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double cs = 1.0 / std::sqrt(1.0 + t * t);
    const double sn = t * cs;

    // Columns (a <- a V), V = [[cs*phase, -sn*phase], [sn, cs]] on (p,q).
    for (int i = 0; i < 4; ++i) {
        const Complex hp = a(i, p);
        const Complex hq = a(i, q);
        a(i, p) = hp * (cs * phase) + hq * sn;
        a(i, q) = -hp * (sn * phase) + hq * cs;
    }
    // Rows (a <- V^dag a).
    const Complex cphase = std::conj(phase);
    for (int j = 0; j < 4; ++j) {
        const Complex hp = a(p, j);
        const Complex hq = a(q, j);
        a(p, j) = cs * cphase * hp + sn * hq;
        a(q, j) = -sn * cphase * hp + cs * hq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);
}

}  // namespace

EigenDecomposition eigvalsh4(const Mat4& h) {
    require_finite(h, "eigvalsh4");
    const double defect = h.hermiticity_defect();
    if (defect > kDensityTol) throw NotHermitianError(defect, kDensityTol);

    Mat4 a = hermitian_part(h);

    constexpr double kTarget = 1e-12;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && max_offdiag(a) > kTarget; ++sweep)
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 4; ++q) rotate(a, p, q);

    // Certificate recomputed from the final matrix, never tracked.
    const double residual = max_offdiag(a);
    if (residual > kTarget) throw NoConvergenceError(residual);

    EigenDecomposition out;
    for (int i = 0; i < 4; ++i) out.eigenvalues[static_cast<std::size_t>(i)] = a(i, i).real();
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    out.max_offdiag_residual = residual;
    return out;
}

NegativityReport negativity_eigen(const DensityMatrix& rho) {
    const Mat4 pt = partial_transpose(rho.matrix(), Subsystem::A);
    const EigenDecomposition ed = eigvalsh4(pt);

    double abs_sum = 0.0;
    double neg_sum = 0.0;
    for (double ev : ed.eigenvalues) {
        abs_sum += std::abs(ev);
        if (ev < 0.0) neg_sum -= ev;
    }
    const double trace_norm_form = (abs_sum - 1.0) / 2.0;
    if (std::abs(trace_norm_form - neg_sum) > 1e-10)
        throw NumericalError("negativity_eigen: (sum|ev|-1)/2 = " +
                             detail::num(trace_norm_form) +
                             " disagrees with sum of negative eigenvalues " +
                             detail::num(neg_sum));

    NegativityReport rep;
    rep.roots = ed.eigenvalues;
    rep.lambda_min = ed.eigenvalues[0];
    rep.negativity = std::max(0.0, trace_norm_form);
    rep.method = Method::Eigen;
    return rep;
}

}  // namespace minneg
