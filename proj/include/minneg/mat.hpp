#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <complex>

#include "minneg/errors.hpp"

namespace minneg {

using Complex = std::complex<double>;

/// Dense complex 2x2 matrix, row-major, value semantics.
struct Mat2 {
    std::array<Complex, 4> e{};

    Complex& operator()(int r, int c) {
        assert(r >= 0 && r < 2 && c >= 0 && c < 2);
        return e[static_cast<std::size_t>(2 * r + c)];
    }
    Complex operator()(int r, int c) const {
        assert(r >= 0 && r < 2 && c >= 0 && c < 2);
        return e[static_cast<std::size_t>(2 * r + c)];
    }

    static Mat2 identity() {
        Mat2 m;
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        return m;
    }

    Complex trace() const { return e[0] + e[3]; }
    Complex det() const { return e[0] * e[3] - e[1] * e[2]; }

    Mat2 adjoint() const {
        Mat2 m;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) m(r, c) = std::conj((*this)(c, r));
        return m;
    }

    bool is_finite() const {
        for (const Complex& z : e)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    /// max |a(i,j) - conj(a(j,i))| over all entries.
    double hermiticity_defect() const {
        double worst = 0.0;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        return worst;
    }

    friend bool operator==(const Mat2& a, const Mat2& b) { return a.e == b.e; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 m;
    for (std::size_t i = 0; i < 4; ++i) m.e[i] = a.e[i] + b.e[i];
    return m;
}

inline Mat2 operator*(Complex s, const Mat2& a) {
    Mat2 m;
    for (std::size_t i = 0; i < 4; ++i) m.e[i] = s * a.e[i];
    return m;
}

inline Mat2 operator*(double s, const Mat2& a) { return Complex(s, 0.0) * a; }

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
    return m;
}

/// Dense complex 4x4 matrix, row-major, value semantics. The composite basis
/// convention is row = 2m + mu, column = 2n + nu, with m,n indexing subsystem
/// A (most significant) and mu,nu subsystem B.
struct Mat4 {
    std::array<Complex, 16> e{};

    Complex& operator()(int r, int c) {
        assert(r >= 0 && r < 4 && c >= 0 && c < 4);
        return e[static_cast<std::size_t>(4 * r + c)];
    }
    Complex operator()(int r, int c) const {
        assert(r >= 0 && r < 4 && c >= 0 && c < 4);
        return e[static_cast<std::size_t>(4 * r + c)];
    }

    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    Complex trace() const { return e[0] + e[5] + e[10] + e[15]; }

    Mat4 adjoint() const {
        Mat4 m;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m(r, c) = std::conj((*this)(c, r));
        return m;
    }

    Mat4 transpose() const {
        Mat4 m;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m(r, c) = (*this)(c, r);
        return m;
    }

    bool is_finite() const {
        for (const Complex& z : e)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    double hermiticity_defect() const {
        double worst = 0.0;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        return worst;
    }

    double max_abs() const {
        double worst = 0.0;
        for (const Complex& z : e) worst = std::max(worst, std::abs(z));
        return worst;
    }

    friend bool operator==(const Mat4& a, const Mat4& b) { return a.e == b.e; }
};

inline Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) m.e[i] = a.e[i] + b.e[i];
    return m;
}

inline Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) m.e[i] = a.e[i] - b.e[i];
    return m;
}

inline Mat4 operator*(Complex s, const Mat4& a) {
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) m.e[i] = s * a.e[i];
    return m;
}

inline Mat4 operator*(double s, const Mat4& a) { return Complex(s, 0.0) * a; }

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Complex acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += a(r, k) * b(k, c);
            m(r, c) = acc;
        }
    return m;
}

/// (a + a†)/2. Leaves an exactly Hermitian input bit-identical and projects a
/// slightly asymmetric one onto its Hermitian part.
inline Mat4 hermitian_part(const Mat4& a) {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
    return m;
}

inline void require_finite(const Mat2& m, const char* where) {
    if (!m.is_finite()) throw NotFiniteError(where);
}

inline void require_finite(const Mat4& m, const char* where) {
    if (!m.is_finite()) throw NotFiniteError(where);
}

}  // namespace minneg
