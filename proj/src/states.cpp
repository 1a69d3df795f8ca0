#include "minneg/states.hpp"

#include <cmath>

namespace minneg {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_qubit_density(const Mat2& m, const char* name) {
    if (!m.is_finite())
        throw InvalidParameterError(std::string("factor ") + name +
                                    " has a non-finite entry");
    const double defect = m.hermiticity_defect();
    if (defect > kDensityTol)
        throw InvalidParameterError(std::string("factor ") + name +
                                    " is not Hermitian: defect " + detail::num(defect));
    const Complex tr = m.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kDensityTol)
        throw InvalidParameterError(std::string("factor ") + name + " has trace " +
                                    detail::num(tr.real()));
    const double det = m.det().real();
    if (det < -1e-12)
        throw InvalidParameterError(std::string("factor ") + name +
                                    " is not positive: det " + detail::num(det));
}

// Haar-random SU(2) element from a uniform unit quaternion.
Mat2 random_su2(Rng& rng) {
    double a, b, c, d, n2;
    do {
        a = rng.gauss();
        b = rng.gauss();
        c = rng.gauss();
        d = rng.gauss();
        n2 = a * a + b * b + c * c + d * d;
    } while (n2 < 1e-12);
    const double n = std::sqrt(n2);
    a /= n;
    b /= n;
    c /= n;
    d /= n;
    Mat2 u;
    u(0, 0) = Complex(a, b);
    u(0, 1) = Complex(c, d);
    u(1, 0) = Complex(-c, d);
    u(1, 1) = Complex(a, -b);
    return u;
}

}  // namespace

DensityMatrix bell_state(BellKind kind) {
    // Sign patterns of (|00> +/- |11>)/sqrt(2) and (|01> +/- |10>)/sqrt(2).
    // The projector entries are +/-1/2, which we write down directly so the
    // matrix is exact in floating point (squaring sqrt(0.5) is off by an ulp).
    std::array<double, 4> sign{};
    switch (kind) {
        case BellKind::PhiPlus:
            sign = {1.0, 0.0, 0.0, 1.0};
            break;
        case BellKind::PhiMinus:
            sign = {1.0, 0.0, 0.0, -1.0};
            break;
        case BellKind::PsiPlus:
            sign = {0.0, 1.0, 1.0, 0.0};
            break;
        case BellKind::PsiMinus:
            sign = {0.0, 1.0, -1.0, 0.0};
            break;
    }
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m(i, j) = 0.5 * sign[static_cast<std::size_t>(i)] *
                      sign[static_cast<std::size_t>(j)];
    return validate_density(m);
}

DensityMatrix werner_state(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidParameterError("werner_state: p = " + detail::num(p) +
                                    " outside [0, 1]");
    const Mat4 m = p * bell_state(BellKind::PsiMinus).matrix() +
                   ((1.0 - p) / 4.0) * Mat4::identity();
    return validate_density(m);
}

DensityMatrix product_state(const Mat2& a, const Mat2& b) {
    require_qubit_density(a, "a");
    require_qubit_density(b, "b");
    return validate_density(kron(a, b));
}

Mat2 random_pure_qubit(Rng& rng) {
    const double cos_theta = 2.0 * rng.uniform() - 1.0;
    const double phi = 2.0 * kPi * rng.uniform();
    const double p0 = (1.0 + cos_theta) / 2.0;  // cos^2(theta/2)
    const double p1 = (1.0 - cos_theta) / 2.0;
    const double cross = std::sqrt(p0 * p1);
    Mat2 m;
    m(0, 0) = p0;
    m(1, 1) = p1;
    m(0, 1) = cross * Complex(std::cos(phi), -std::sin(phi));
    m(1, 0) = std::conj(m(0, 1));
    return m;
}

SeparableSample random_separable(int n_terms, Rng& rng) {
    if (n_terms < 1)
        throw InvalidParameterError("random_separable: n_terms must be >= 1");

    SeparableEnsemble ens;
    ens.weights.reserve(static_cast<std::size_t>(n_terms));
    ens.factors.reserve(static_cast<std::size_t>(n_terms));

    double total = 0.0;
    for (int i = 0; i < n_terms; ++i) {
        ens.weights.push_back(rng.exponential());
        total += ens.weights.back();
    }
    for (double& w : ens.weights) w /= total;

    Mat4 m;
    for (int i = 0; i < n_terms; ++i) {
        const Mat2 fa = random_pure_qubit(rng);
        const Mat2 fb = random_pure_qubit(rng);
        ens.factors.emplace_back(fa, fb);
        m = m + ens.weights[static_cast<std::size_t>(i)] * kron(fa, fb);
    }
    return {validate_density(m), std::move(ens)};
}

SeparableSample random_separable(int n_terms, std::uint64_t seed) {
    Rng rng(seed);
    return random_separable(n_terms, rng);
}

DensityMatrix random_density(Rng& rng) {
    Mat4 g;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = Complex(rng.gauss(), rng.gauss());
    const Mat4 h = g * g.adjoint();
    const double tr = h.trace().real();
    return validate_density((1.0 / tr) * h);
}

DensityMatrix random_density(std::uint64_t seed) {
    Rng rng(seed);
    return random_density(rng);
}

Mat4 random_local_unitary(Rng& rng) {
    return kron(random_su2(rng), random_su2(rng));
}

Mat4 random_local_unitary(std::uint64_t seed) {
    Rng rng(seed);
    return random_local_unitary(rng);
}

}  // namespace minneg
