#include "minneg/minors.hpp"

#include <algorithm>
#include <cmath>

namespace minneg {

namespace {

// Principal 2x2 determinant on rows/cols {i, j}.
Complex det2(const Mat4& m, int i, int j) {
    return m(i, i) * m(j, j) - m(i, j) * m(j, i);
}

// General 3x3 determinant on rows {r0,r1,r2} x cols {c0,c1,c2}.
Complex det3(const Mat4& m, int r0, int r1, int r2, int c0, int c1, int c2) {
    return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
           m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
           m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
}

// Full determinant by expansion along the first row.
Complex det4(const Mat4& m) {
    return m(0, 0) * det3(m, 1, 2, 3, 1, 2, 3) - m(0, 1) * det3(m, 1, 2, 3, 0, 2, 3) +
           m(0, 2) * det3(m, 1, 2, 3, 0, 1, 3) - m(0, 3) * det3(m, 1, 2, 3, 0, 1, 2);
}

constexpr double kImagResidueTol = 1e-12;

double real_minor(Complex d) {
    if (std::abs(d.imag()) > kImagResidueTol)
        throw NumericalError("principal minor has imaginary residue " +
                             detail::num(d.imag()));
    return d.real();
}

// Evaluates p(x) = x^4 - s1 x^3 + s2 x^2 - s3 x + s4 by Horner's rule.
double eval_quartic(const CharPolyCoefficients& c, double x) {
    return (((x - c.s1) * x + c.s2) * x - c.s3) * x + c.s4;
}

double eval_quartic_deriv(const CharPolyCoefficients& c, double x) {
    return ((4.0 * x - 3.0 * c.s1) * x + 2.0 * c.s2) * x - c.s3;
}

double sqrt_clamped(double v) {
    // Imaginary residues from roundoff are clamped to zero; a genuinely
    // complex pair surfaces later through the residual gate.
    return v > 0.0 ? std::sqrt(v) : 0.0;
}

// Largest real root of t^3 + a2 t^2 + a1 t + a0, solved trigonometrically
// (the resolvent of a totally real quartic always has three real roots).
double cubic_max_root(double a2, double a1, double a0) {
    const double p = a1 - a2 * a2 / 3.0;
    const double q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    double u;
    if (p < -1e-30) {
        const double w = std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p);
        arg = std::clamp(arg, -1.0, 1.0);
        u = 2.0 * w * std::cos(std::acos(arg) / 3.0);
    } else if (p > 1e-30) {
        // One real root; cannot occur for legitimate resolvents but keeps
        // the helper total.
        const double w = std::sqrt(p / 3.0);
        const double t = 3.0 * std::abs(q) / (2.0 * p) * std::sqrt(3.0 / p);
        const double s = q >= 0.0 ? 1.0 : -1.0;
        u = -2.0 * s * w * std::sinh(std::asinh(t) / 3.0);
    } else {
        u = std::cbrt(-q);
    }
    return u - a2 / 3.0;
}

// Newton polish; keeps the best iterate by residual.
double polish_root(const CharPolyCoefficients& c, double x) {
    double best_x = x;
    double best_r = std::abs(eval_quartic(c, x));
    for (int iter = 0; iter < 50 && best_r > 1e-14; ++iter) {
        const double px = eval_quartic(c, x);
        const double dpx = eval_quartic_deriv(c, x);
        if (!std::isfinite(px) || dpx == 0.0) break;
        const double step = px / dpx;
        x -= step;
        if (!std::isfinite(x)) break;
        const double r = std::abs(eval_quartic(c, x));
        if (r < best_r) {
            best_r = r;
            best_x = x;
        }
        if (std::abs(step) <= std::abs(x) * 1e-16) break;
    }
    return best_x;
}

}  // namespace

MinorSet principal_minors(const Mat4& h) {
    require_finite(h, "principal_minors");
    const double defect = h.hermiticity_defect();
    if (defect > kDensityTol) throw NotHermitianError(defect, kDensityTol);

    const Mat4 m = hermitian_part(h);

    MinorSet out;
    for (int i = 0; i < 4; ++i) out.order1[static_cast<std::size_t>(i)] = m(i, i).real();

    static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int l = 0; l < 6; ++l)
        out.order2[static_cast<std::size_t>(l)] =
            real_minor(det2(m, kPairs[l][0], kPairs[l][1]));

    static constexpr int kTriples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (int l = 0; l < 4; ++l) {
        const int* t = kTriples[l];
        out.order3[static_cast<std::size_t>(l)] =
            real_minor(det3(m, t[0], t[1], t[2], t[0], t[1], t[2]));
    }

    out.order4 = real_minor(det4(m));
    return out;
}

CharPolyCoefficients minor_sums(const MinorSet& m) {
    CharPolyCoefficients c{};
    for (double v : m.order1) c.s1 += v;
    for (double v : m.order2) c.s2 += v;
    for (double v : m.order3) c.s3 += v;
    c.s4 = m.order4;
    return c;
}

std::array<double, 4> quartic_real_roots(const CharPolyCoefficients& c) {
    for (double v : {c.s1, c.s2, c.s3, c.s4})
        if (!std::isfinite(v))
            throw InvalidParameterError("quartic_real_roots: non-finite coefficient");

    // Monic form x^4 + a x^3 + b x^2 + cc x + d, depressed by x = y - a/4.
    const double a = -c.s1;
    const double b = c.s2;
    const double cc = -c.s3;
    const double d = c.s4;

    const double a2 = a * a;
    const double p = b - 3.0 * a2 / 8.0;
    const double q = cc - a * b / 2.0 + a2 * a / 8.0;
    const double r = d - a * cc / 4.0 + a2 * b / 16.0 - 3.0 * a2 * a2 / 256.0;

    // Ferrari resolvent: m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0. Its largest
    // root is (y_i + y_j)^2 / 2 over the best pairing of the depressed roots.
    double mres = cubic_max_root(p, p * p / 4.0 - r, -q * q / 8.0);
    if (mres < 0.0) mres = 0.0;
    const double s = std::sqrt(2.0 * mres);

    std::array<double, 4> y;
    if (s < 1e-150) {
        // Spectrum collapses to +/- pairs of equal magnitude ~0; biquadratic.
        const double disc = sqrt_clamped(p * p / 4.0 - r);
        const double z0 = -p / 2.0 + disc;
        const double z1 = -p / 2.0 - disc;
        const double y0 = sqrt_clamped(z0);
        const double y1 = sqrt_clamped(z1);
        y = {y0, -y0, y1, -y1};
    } else {
        const double half = p / 2.0 + mres;
        const double shift = q / (2.0 * s);
        const double fa = half - shift;  // y^2 + s y + fa
        const double fb = half + shift;  // y^2 - s y + fb
        const double d1 = sqrt_clamped(s * s - 4.0 * fa);
        const double d2 = sqrt_clamped(s * s - 4.0 * fb);
        y = {(-s + d1) / 2.0, (-s - d1) / 2.0, (s + d2) / 2.0, (s - d2) / 2.0};
    }

    std::array<double, 4> roots;
    for (int i = 0; i < 4; ++i)
        roots[static_cast<std::size_t>(i)] =
            polish_root(c, y[static_cast<std::size_t>(i)] - a / 4.0);
    std::sort(roots.begin(), roots.end());

    double worst = 0.0;
    for (double x : roots) worst = std::max(worst, std::abs(eval_quartic(c, x)));
    if (worst > 1e-10) throw ResidualTooLargeError(worst);

    return roots;
}

SeparabilityVerdict sylvester_separable(const Mat4& pt, double tol) {
    if (!(tol >= 0.0))
        throw InvalidParameterError("sylvester_separable: tolerance must be >= 0");

    const MinorSet ms = principal_minors(pt);

    SeparabilityVerdict v;
    v.tolerance = tol;
    auto scan = [&](int order, int index, double value) {
        if (value < -tol) v.negative_minors.push_back({order, index, value});
    };
    for (int l = 0; l < 4; ++l) scan(1, l + 1, ms.order1[static_cast<std::size_t>(l)]);
    for (int l = 0; l < 6; ++l) scan(2, l + 1, ms.order2[static_cast<std::size_t>(l)]);
    for (int l = 0; l < 4; ++l) scan(3, l + 1, ms.order3[static_cast<std::size_t>(l)]);
    scan(4, 1, ms.order4);
    v.separable = v.negative_minors.empty();
    return v;
}

NegativityReport negativity_minors(const DensityMatrix& rho) {
    const Mat4 pt = partial_transpose(rho.matrix(), Subsystem::A);
    const auto roots = quartic_real_roots(minor_sums(principal_minors(pt)));
    NegativityReport rep;
    rep.roots = roots;
    rep.lambda_min = roots[0];
    rep.negativity = std::max(0.0, -roots[0]);
    rep.method = Method::Minors;
    return rep;
}

double negative_minor_sum(const Mat4& pt) {
    const MinorSet ms = principal_minors(pt);
    double sum = 0.0;
    for (double v : ms.order1) sum += std::min(v, 0.0);
    for (double v : ms.order2) sum += std::min(v, 0.0);
    for (double v : ms.order3) sum += std::min(v, 0.0);
    sum += std::min(ms.order4, 0.0);
    return -sum;
}

}  // namespace minneg
