#pragma once

// Shared harness for the test binaries: a tiny runner that prints one
// [PASS]/[FAIL] line per test plus reference implementations (permutation-sum
// determinants, subset enumeration) kept deliberately independent of the
// library code they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "minneg/mat.hpp"

namespace testkit {

inline int g_failures = 0;
inline int g_passes = 0;

struct CheckFailure : std::runtime_error {
    explicit CheckFailure(const std::string& msg) : std::runtime_error(msg) {}
};

inline void run_test(const std::string& name, const std::function<void()>& body) {
    try {
        body();
        ++g_passes;
        std::printf("[PASS] %s\n", name.c_str());
    } catch (const std::exception& e) {
        ++g_failures;
        std::printf("[FAIL] %s: %s\n", name.c_str(), e.what());
    } catch (...) {
        ++g_failures;
        std::printf("[FAIL] %s: non-standard exception\n", name.c_str());
    }
    std::fflush(stdout);
}

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw CheckFailure(msg);
}

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void check_close(double actual, double expected, double tol, const std::string& what) {
    const double diff = std::abs(actual - expected);
    if (!(diff <= tol)) {
        throw CheckFailure(what + ": got " + fmt(actual) + ", want " + fmt(expected) +
                           " (diff " + fmt(diff) + " > tol " + fmt(tol) + ")");
    }
}

inline void check_close(std::complex<double> actual, std::complex<double> expected,
                        double tol, const std::string& what) {
    const double diff = std::abs(actual - expected);
    if (!(diff <= tol)) {
        std::ostringstream os;
        os << what << ": got (" << fmt(actual.real()) << "," << fmt(actual.imag())
           << "), want (" << fmt(expected.real()) << "," << fmt(expected.imag())
           << ") diff " << fmt(diff);
        throw CheckFailure(os.str());
    }
}

inline void check_mat_close(const minneg::Mat4& actual, const minneg::Mat4& expected,
                            double tol, const std::string& what) {
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            check_close(actual(r, c), expected(r, c), tol,
                        what + " entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
}

inline int summary(const char* suite) {
    std::printf("%s: %d passed, %d failed\n", suite, g_passes, g_failures);
    return g_failures == 0 ? 0 : 1;
}

// ---- reference oracles ----------------------------------------------------

// Determinant of an n-by-n complex matrix (row-major, n <= 4) as the signed
// sum over all permutations. Slow and simple on purpose.
inline std::complex<double> leibniz_det(const std::vector<std::complex<double>>& a, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::complex<double> total = 0.0;
    // Iterate permutations in lexicographic order via std::next_permutation,
    // tracking parity by counting inversions from scratch each time.
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::complex<double> term = (inversions % 2 == 0) ? 1.0 : -1.0;
        for (int i = 0; i < n; ++i) term *= a[static_cast<std::size_t>(i * n + perm[i])];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// All k-element subsets of {0,1,2,3} in lexicographic order.
inline std::vector<std::vector<int>> subsets4(int k) {
    std::vector<std::vector<int>> out;
    for (int a = 0; a < 4; ++a) {
        if (k == 1) {
            out.push_back({a});
            continue;
        }
        for (int b = a + 1; b < 4; ++b) {
            if (k == 2) {
                out.push_back({a, b});
                continue;
            }
            for (int c = b + 1; c < 4; ++c) {
                if (k == 3) {
                    out.push_back({a, b, c});
                    continue;
                }
                for (int d = c + 1; d < 4; ++d) out.push_back({a, b, c, d});
            }
        }
    }
    return out;
}

// Principal minor of `m` on the given index subset, via the permutation-sum
// determinant above.
inline std::complex<double> reference_minor(const minneg::Mat4& m, const std::vector<int>& idx) {
    const int n = static_cast<int>(idx.size());
    std::vector<std::complex<double>> sub(static_cast<std::size_t>(n * n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            sub[static_cast<std::size_t>(r * n + c)] = m(idx[static_cast<std::size_t>(r)],
                                                         idx[static_cast<std::size_t>(c)]);
    return leibniz_det(sub, n);
}

// Characteristic-polynomial value det(x*I - m) computed from the reference
// determinant, for validating roots without the library's own quartic.
inline std::complex<double> reference_charpoly(const minneg::Mat4& m, double x) {
    std::vector<std::complex<double>> a(16);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            a[static_cast<std::size_t>(r * 4 + c)] = (r == c ? x : 0.0) - m(r, c);
    return leibniz_det(a, 4);
}

}  // namespace testkit
