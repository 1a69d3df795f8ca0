// Cross-module property tests: the two negativity pipelines run against each
// other on random ensembles, plus structural invariants of the partial
// transpose and the quartic coefficients. Reduced trial counts; the full-size
// runs live in the acceptance binary.

#include <cmath>

#include "minneg/eigen_oracle.hpp"
#include "minneg/minors.hpp"
#include "minneg/report.hpp"
#include "minneg/rng.hpp"
#include "minneg/states.hpp"
#include "test_support.hpp"

using namespace minneg;
using testkit::check;
using testkit::check_close;
using testkit::run_test;

int main() {
    run_test("both negativity paths agree on random states", [] {
        Rng rng(60001);
        for (int trial = 0; trial < 500; ++trial) {
            const DensityMatrix rho = random_density(rng);
            const double a = negativity_minors(rho).negativity;
            const double b = negativity_eigen(rho).negativity;
            check_close(a, b, 1e-8, "path agreement");
        }
    });

    run_test("both negativity paths agree on separable states", [] {
        Rng rng(60002);
        for (int trial = 0; trial < 200; ++trial) {
            const SeparableSample s = random_separable(3, rng);
            check_close(negativity_minors(s.state).negativity,
                        negativity_eigen(s.state).negativity, 1e-8, "path agreement");
        }
    });

    run_test("minor sums equal elementary symmetric polynomials of eigenvalues", [] {
        Rng rng(60003);
        for (int trial = 0; trial < 100; ++trial) {
            const Mat4 pt =
                partial_transpose(random_density(rng).matrix(), Subsystem::A);
            const CharPolyCoefficients c = minor_sums(principal_minors(pt));
            const auto ev = eigvalsh4(pt).eigenvalues;
            const double e1 = ev[0] + ev[1] + ev[2] + ev[3];
            const double e2 = ev[0] * ev[1] + ev[0] * ev[2] + ev[0] * ev[3] +
                              ev[1] * ev[2] + ev[1] * ev[3] + ev[2] * ev[3];
            const double e3 = ev[0] * ev[1] * ev[2] + ev[0] * ev[1] * ev[3] +
                              ev[0] * ev[2] * ev[3] + ev[1] * ev[2] * ev[3];
            const double e4 = ev[0] * ev[1] * ev[2] * ev[3];
            check_close(c.s1, e1, 1e-9, "s1");
            check_close(c.s2, e2, 1e-9, "s2");
            check_close(c.s3, e3, 1e-9, "s3");
            check_close(c.s4, e4, 1e-9, "s4");
        }
    });

    run_test("quartic roots match oracle eigenvalues one by one", [] {
        Rng rng(60004);
        for (int trial = 0; trial < 200; ++trial) {
            const Mat4 pt =
                partial_transpose(random_density(rng).matrix(), Subsystem::A);
            const auto roots = quartic_real_roots(minor_sums(principal_minors(pt)));
            const auto ev = eigvalsh4(pt).eigenvalues;
            for (int i = 0; i < 4; ++i)
                check_close(roots[static_cast<std::size_t>(i)],
                            ev[static_cast<std::size_t>(i)], 1e-8, "root vs eigenvalue");
        }
    });

    run_test("at most one partial-transpose root is negative", [] {
        Rng rng(60005);
        for (int trial = 0; trial < 500; ++trial) {
            const Mat4 pt =
                partial_transpose(random_density(rng).matrix(), Subsystem::A);
            const auto roots = quartic_real_roots(minor_sums(principal_minors(pt)));
            check(!(roots[1] < -1e-10), "second-smallest root not negative");
        }
    });

    run_test("transposing side A or side B gives the same spectrum", [] {
        Rng rng(60006);
        for (int trial = 0; trial < 200; ++trial) {
            const Mat4 m = random_density(rng).matrix();
            const auto ra = quartic_real_roots(
                minor_sums(principal_minors(partial_transpose(m, Subsystem::A))));
            const auto rb = quartic_real_roots(
                minor_sums(principal_minors(partial_transpose(m, Subsystem::B))));
            for (int i = 0; i < 4; ++i)
                check_close(ra[static_cast<std::size_t>(i)],
                            rb[static_cast<std::size_t>(i)], 1e-10, "spectrum");
        }
    });

    run_test("partial transpose preserves the reduced states", [] {
        Rng rng(60007);
        for (int trial = 0; trial < 100; ++trial) {
            const Mat4 m = random_density(rng).matrix();
            const Mat4 pt = partial_transpose(m, Subsystem::A);
            // Tracing out the transposed side leaves the other factor alone;
            // tracing out the untouched side transposes the reduced state.
            const Mat2 rb = partial_trace(m, Subsystem::A);
            const Mat2 rb_pt = partial_trace(pt, Subsystem::A);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    check_close(rb_pt(r, c), rb(r, c), 0.0, "reduced B unchanged");
            const Mat2 ra = partial_trace(m, Subsystem::B);
            const Mat2 ra_pt = partial_trace(pt, Subsystem::B);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    check_close(ra_pt(r, c), ra(c, r), 0.0, "reduced A transposed");
        }
    });

    run_test("negativity is invariant under local unitaries", [] {
        Rng rng(60008);
        for (int trial = 0; trial < 100; ++trial) {
            const DensityMatrix rho = random_density(rng);
            const Mat4 u = random_local_unitary(rng);
            const DensityMatrix rotated =
                validate_density(hermitian_part(u * rho.matrix() * u.adjoint()));
            check_close(negativity_minors(rotated).negativity,
                        negativity_minors(rho).negativity, 1e-8, "invariance");
        }
    });

    run_test("negativity stays within [0, 1/2]", [] {
        Rng rng(60009);
        for (int trial = 0; trial < 300; ++trial) {
            const double n = negativity_minors(random_density(rng)).negativity;
            check(n >= 0.0 && n <= 0.5 + 1e-12, "range");
        }
        check_close(negativity_minors(bell_state(BellKind::PhiMinus)).negativity, 0.5,
                    1e-12, "maximum attained");
    });

    run_test("sylvester verdict matches the sign of the smallest eigenvalue", [] {
        Rng rng(60010);
        for (int trial = 0; trial < 500; ++trial) {
            const Mat4 pt =
                partial_transpose(random_density(rng).matrix(), Subsystem::A);
            const double lambda_min = eigvalsh4(pt).eigenvalues[0];
            if (std::abs(lambda_min) <= 1e-8) continue;  // boundary band
            const bool separable = sylvester_separable(pt).separable;
            check(separable == (lambda_min > 0.0), "verdict vs lambda_min sign");
        }
    });

    run_test("separable-by-construction states are declared separable", [] {
        Rng rng(60011);
        for (int trial = 0; trial < 500; ++trial) {
            const int terms = 1 + static_cast<int>(rng.next_u64() % 6);
            const SeparableSample s = random_separable(terms, rng);
            const Mat4 pt = partial_transpose(s.state.matrix(), Subsystem::A);
            check(sylvester_separable(pt).separable, "separable verdict");
        }
    });

    run_test("a clearly negative determinant is always flagged", [] {
        // One negative eigenvalue makes the full determinant negative; when
        // the eigenvalue product is comfortably below the flag tolerance the
        // verdict must list m4_1.
        Rng rng(60012);
        for (int trial = 0; trial < 300; ++trial) {
            const Mat4 pt =
                partial_transpose(random_density(rng).matrix(), Subsystem::A);
            const auto ev = eigvalsh4(pt).eigenvalues;
            const double det = ev[0] * ev[1] * ev[2] * ev[3];
            if (det >= -1e-8) continue;
            bool has_det = false;
            for (const NegativeMinor& nm : sylvester_separable(pt).negative_minors)
                if (nm.order == 4) has_det = true;
            check(has_det, "negative determinant flagged as m4_1");
        }
    });

    run_test("analysis report is internally consistent", [] {
        Rng rng(60013);
        for (int trial = 0; trial < 50; ++trial) {
            const DensityMatrix rho = random_density(rng);
            const AnalysisReport rep = analyze(rho);
            check_close(rep.agreement,
                        std::abs(rep.negativity_minor_path - rep.negativity_eigen_path),
                        0.0, "agreement field");
            check(rep.agreement <= 1e-8, "paths agree");
            const CharPolyCoefficients direct = minor_sums(rep.minors);
            check_close(rep.coefficients.s1, direct.s1, 0.0, "s1 consistent");
            check_close(rep.coefficients.s4, direct.s4, 0.0, "s4 consistent");
            check(rep.verdict.separable == rep.verdict.negative_minors.empty(),
                  "verdict consistent with violation list");
            check_close(rep.negativity_minor_path, std::max(0.0, -rep.roots[0]), 0.0,
                        "negativity from smallest root");
        }
    });

    return testkit::summary("properties");
}
