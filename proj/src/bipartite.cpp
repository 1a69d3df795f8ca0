#include "minneg/bipartite.hpp"

#include "minneg/minors.hpp"

namespace minneg {

Mat4 kron(const Mat2& a, const Mat2& b) {
    require_finite(a, "kron (left factor)");
    require_finite(b, "kron (right factor)");
    Mat4 out;
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n)
            for (int mu = 0; mu < 2; ++mu)
                for (int nu = 0; nu < 2; ++nu)
                    out(2 * m + mu, 2 * n + nu) = a(m, n) * b(mu, nu);
    return out;
}

Mat4 partial_transpose(const Mat4& g, Subsystem side) {
    require_finite(g, "partial_transpose");
    Mat4 out;
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n)
            for (int mu = 0; mu < 2; ++mu)
                for (int nu = 0; nu < 2; ++nu) {
                    if (side == Subsystem::A)
                        out(2 * m + mu, 2 * n + nu) = g(2 * n + mu, 2 * m + nu);
                    else
                        out(2 * m + mu, 2 * n + nu) = g(2 * m + nu, 2 * n + mu);
                }
    return out;
}

Mat2 partial_trace(const Mat4& g, Subsystem traced) {
    require_finite(g, "partial_trace");
    Mat2 out;
    if (traced == Subsystem::B) {
        for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n)
                out(m, n) = g(2 * m + 0, 2 * n + 0) + g(2 * m + 1, 2 * n + 1);
    } else {
        for (int mu = 0; mu < 2; ++mu)
            for (int nu = 0; nu < 2; ++nu)
                out(mu, nu) = g(0 + mu, 0 + nu) + g(2 + mu, 2 + nu);
    }
    return out;
}

DensityMatrix validate_density(const Mat4& g) {
    require_finite(g, "validate_density");

    const double defect = g.hermiticity_defect();
    if (defect > kDensityTol) throw NotHermitianError(defect, kDensityTol);

    const Complex tr = g.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kDensityTol)
        throw TraceNotOneError(tr.real(), kDensityTol);

    // Sylvester PSD check on rho itself.
    const MinorSet ms = principal_minors(g);
    auto check = [](int order, int index, double value) {
        if (value < -kDensityTol) throw NotPsdError(order, index, value, kDensityTol);
    };
    for (int l = 0; l < 4; ++l) check(1, l + 1, ms.order1[static_cast<std::size_t>(l)]);
    for (int l = 0; l < 6; ++l) check(2, l + 1, ms.order2[static_cast<std::size_t>(l)]);
    for (int l = 0; l < 4; ++l) check(3, l + 1, ms.order3[static_cast<std::size_t>(l)]);
    check(4, 1, ms.order4);

    return DensityMatrix(g);
}

}  // namespace minneg
