#include <cmath>

#include "cheun/batch.hpp"
#include "cheun/goursat.hpp"
#include "cheun/residual.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cheun;
using testutil::Rng;

TEST_CASE("initialization fields and R_0 = 0") {
    const GoursatExpansion e = init_expansion(validate(0.25, 1, 1, 1, 0), 8);
    CHECK(e.gamma0 == cplx(1.0));
    CHECK(e.alpha0 == cplx(1.0));
    CHECK(e.s0 == cplx(-1.0));
    CHECK(rqp(0, e).R == cplx(0.0));

    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const CheParams q = validate(rng.box(-0.5, 0.5) + cplx(0.6, 0.0), rng.box(-1.3, 1.3),
                                     rng.box(-1.3, 1.3), rng.box(-1.3, 1.3), 0.0);
        const GoursatExpansion f = init_expansion(q, 0);
        CHECK(rqp(0, f).R == cplx(0.0));
    }
}

TEST_CASE("initialization guards") {
    try {
        init_expansion(validate(0.25, 1, 1, 1, 0.3), 4);
        FAIL("expected NotSigmaZero");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_sigma_zero);
    }
    // gamma - delta = 2 kills R_2
    try {
        init_expansion(validate(0.25, 1.5, -0.5, 1, 0), 2);
        FAIL("expected DegenerateRn");
    } catch (const error& e) {
        CHECK(e.code() == errc::degenerate_rn);
    }
    CHECK_NOTHROW(init_expansion(validate(0.25, 1.5, -0.5, 1, 0), 1));
}

TEST_CASE("recurrence coefficient spot values") {
    // gamma = delta = 1: gamma_n = 1 + n, R_1 = (1-2)(2-1) = -1
    const GoursatExpansion e = init_expansion(validate(0.25, 1, 1, 1, 0), 4);
    CHECK(std::abs(rqp(1, e).R - cplx(-1.0)) < 1e-15);
    // alpha - gamma = -1 makes alpha_0 = 0, hence P_0 = 0
    const GoursatExpansion f = init_expansion(validate(0.25, 1.2, 0.4, 0.2, 0), 4);
    CHECK(std::abs(f.alpha0) < 1e-15);
    CHECK(rqp(0, f).P == cplx(0.0));
}

TEST_CASE("a_1 = -Q_0 / R_1 with Q_0 = 4p(1+alpha) - gamma delta") {
    Rng rng(34);
    for (int i = 0; i < 12; ++i) {
        const CheParams q = validate(rng.box(-0.5, 0.5) + cplx(0.6, 0.0),
                                     testutil::draw_off_integer(rng, -1.4, 1.4),
                                     rng.box(-1.2, 1.2), rng.box(-1.2, 1.2), 0.0);
        GoursatExpansion e = compute_coefficients(init_expansion(q, 1), 1);
        const cplx q0 = 4.0 * q.p * (1.0 + q.alpha) - q.gamma * q.delta;
        const cplx r1 = rqp(1, e).R;
        CHECK(std::abs(e.coeffs[1] + q0 / r1) < 1e-13 * (1.0 + std::abs(q0 / r1)));
        CHECK(std::abs(rqp(0, e).Q - q0) < 1e-13 * (1.0 + std::abs(q0)));
    }
}

TEST_CASE("recurrence consistency of computed coefficients") {
    const CheParams q = validate(0.3, 0.7, 0.4, 1.1, 0.0);
    const GoursatExpansion e = compute_coefficients(init_expansion(q, 20), 20);
    for (int n = 2; n <= 20; ++n) {
        const cplx lhs = rqp(n, e).R * e.coeffs[n] + rqp(n - 1, e).Q * e.coeffs[n - 1] +
                         rqp(n - 2, e).P * e.coeffs[n - 2];
        const double scale = std::max({std::abs(rqp(n, e).R * e.coeffs[n]),
                                       std::abs(rqp(n - 1, e).Q * e.coeffs[n - 1]),
                                       std::abs(rqp(n - 2, e).P * e.coeffs[n - 2])});
        CHECK(std::abs(lhs) <= 1e-12 * scale);
    }
}

TEST_CASE("terminating example: N = 1, w collapses to a single Kummer term") {
    // Q_0 = 4p(1+alpha) + gamma vanishes at p = -1/4 for gamma = 1, alpha = 0, delta = -1.
    const CheParams q = validate(-0.25, 1.0, -1.0, 0.0, 0.0);
    GoursatExpansion e = compute_coefficients(init_expansion(q, 1), 1);
    CHECK(std::abs(e.coeffs[1]) < 1e-15);

    const C2Sample w = eval_w(e, 0.3);
    CHECK(std::abs(w.value - cplx(1.0)) == 0.0);  // 1F1(0; -1; z) = 1

    std::vector<cplx> pts;
    Rng rng(4);
    for (int i = 0; i < 6; ++i) pts.push_back(rng.annulus(0.1, 0.4));
    const auto rep = batch::residual_scan_serial(goursat_w_a1(q), goursat_w_a0(q),
                                                 [&](cplx z) { return eval_w(e, z); }, pts);
    CHECK(rep.max_residual < 1e-10);
}

TEST_CASE("w(0) is the plain coefficient sum") {
    const CheParams q = validate(0.3, 0.7, 0.4, 1.1, 0.0);
    const GoursatExpansion e = compute_coefficients(init_expansion(q, 10), 10);
    cplx sum = 0.0;
    for (cplx a : e.coeffs) sum += a;
    CHECK(std::abs(eval_w(e, 0.0).value - sum) < 1e-13 * std::abs(sum));
}

TEST_CASE("derivative linkage d(u - C0)/dz = (1 - gamma) z^{-gamma} w") {
    Rng rng(777);
    int done = 0;
    while (done < 20) {
        const cplx p = rng.annulus(0.1, 0.5);  // |4p| <= 2
        const cplx gamma = testutil::draw_off_integer(rng, -1.4, 1.4);
        if (std::abs(gamma - 1.0) < 0.2) continue;
        const cplx delta = testutil::draw_off_integer(rng, -1.4, 1.4);
        const cplx alpha = rng.box(-1, 1);
        CheParams q = validate(p, gamma, delta, alpha, 0.0);
        GoursatExpansion e;
        try {
            e = compute_coefficients(init_expansion(q, 10), 10);
        } catch (const error&) {
            continue;
        }
        e.C0 = cplx(0.4, -0.2);  // arbitrary; drops out of the derivative
        bool ok = true;
        for (int i = 0; i < 10 && ok; ++i) {
            const cplx z = testutil::safe_disk_points(rng, 1, 0.1, 0.4)[0];
            try {
                const C2Sample u = eval_u(e, z);
                const C2Sample w = eval_w(e, z);
                const cplx want = (1.0 - gamma) * cpow(z, -gamma) * w.value;
                CHECK(std::abs(u.d1 - want) <= 1e-9 * (1.0 + std::abs(want)));
            } catch (const error&) {
                ok = false;  // pole collision in a shifted lower parameter; redraw
            }
        }
        if (ok) ++done;
    }
}

TEST_CASE("eval_u guards") {
    const CheParams q = validate(0.3, 0.7, 0.4, 1.1, 0.0);
    GoursatExpansion e = compute_coefficients(init_expansion(q, 6), 6);
    try {
        eval_u(e, 0.3);
        FAIL("expected C0Undetermined");
    } catch (const error& err) {
        CHECK(err.code() == errc::c0_undetermined);
    }
    const CheParams g1 = validate(0.3, 1.0, 0.4, 1.1, 0.0);
    GoursatExpansion e1 = compute_coefficients(init_expansion(g1, 6), 6);
    e1.C0 = 0.0;
    try {
        eval_u(e1, 0.3);
        FAIL("expected DegenerateGamma");
    } catch (const error& err) {
        CHECK(err.code() == errc::degenerate_gamma);
    }
}

TEST_CASE("terminated series: u with C0 = 0 solves the equation; determine_C0 agrees") {
    // N = 2 termination on the delta = -N branch, frozen roots.
    const cplx gamma = 0.6, alpha = 0.3;
    const TerminationCase tc =
        termination_case(2, TerminationBranch::delta_eq_minus_n, gamma, alpha);
    REQUIRE(tc.p_roots.size() == 2);
    CHECK(std::abs(tc.p_roots[0] - cplx(-0.28146643623447)) < 1e-10);
    CHECK(std::abs(tc.p_roots[1] - cplx(0.035647038241161)) < 1e-10);

    for (cplx root : tc.p_roots) {
        const CheParams q = validate(root, gamma, -2.0, alpha, 0.0);
        GoursatExpansion e = compute_coefficients(init_expansion(q, 5), 5);
        double big = 0.0;
        for (cplx a : e.coeffs) big = std::max(big, std::abs(a));
        CHECK(std::abs(e.coeffs[2]) <= 1e-10 * big);
        CHECK(std::abs(e.coeffs[3]) <= 1e-10 * big);
        CHECK(std::abs(e.coeffs[4]) <= 1e-10 * big);

        e.C0 = 0.0;
        Rng rng(99);
        std::vector<cplx> pts = testutil::safe_disk_points(rng, 10, 0.1, 0.4);
        const auto rep = che_residual(q, [&](cplx z) { return eval_u(e, z); }, pts);
        CHECK(rep.max_residual < 1e-8);

        // the equation itself fixes the constant to zero here
        CHECK(std::abs(determine_C0(e, cplx(0.27, 0.11))) < 1e-9);
        CHECK(std::abs(determine_C0(e, cplx(-0.2, 0.23))) < 1e-9);

        // linearity probe: shifting u by c moves the estimate to -c, at every z_star
        GoursatExpansion shifted = e;
        shifted.C0 = cplx(0.31, -0.12);
        const cplx est1 = determine_C0(shifted, cplx(0.27, 0.11)) ;
        const cplx est2 = determine_C0(shifted, cplx(-0.2, 0.23));
        CHECK(std::abs(est1 - *shifted.C0) < 1e-8);
        CHECK(std::abs(est2 - *shifted.C0) < 1e-8);
    }
}

TEST_CASE("determine_C0 needs g != 0 (alpha = 0 is unconstrained)") {
    const CheParams q = validate(0.3, 0.7, 0.4, 0.0, 0.0);
    GoursatExpansion e = compute_coefficients(init_expansion(q, 4), 4);
    try {
        determine_C0(e, 0.3);
        FAIL("expected GZero");
    } catch (const error& err) {
        CHECK(err.code() == errc::g_zero);
    }
}

TEST_CASE("termination polynomial: analytic N = 1 root and exact degrees") {
    // N = 1, delta = -1 branch: a_1(p) propto 4p(1+alpha) + gamma
    const Poly a1 = termination_polynomial(1, TerminationBranch::delta_eq_minus_n, 1.0, 0.0);
    CHECK(a1.degree() == 1);
    const auto roots = find_termination_p(a1);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0] - cplx(-0.25)) < 1e-12);

    Rng rng(2233);
    for (int N = 1; N <= 3; ++N) {
        const cplx g = testutil::draw_off_integer(rng, -1.2, 1.2);
        const cplx free1 = rng.box(-1, 1);
        CHECK(termination_polynomial(N, TerminationBranch::delta_eq_minus_n, g, free1).degree() == N);
        CHECK(termination_polynomial(N, TerminationBranch::alpha_minus_gamma_eq_minus_n, g, free1)
                  .degree() == N);
    }
}

TEST_CASE("P_{N-1} vanishes identically under either branch constraint") {
    Rng rng(552);
    for (int N = 1; N <= 3; ++N) {
        const cplx g = testutil::draw_off_integer(rng, -1.2, 1.2);
        const cplx freev = rng.box(-1, 1);
        const CheParams qa = validate(rng.annulus(0.2, 0.6), g, -static_cast<double>(N), freev, 0.0);
        const GoursatExpansion ea = init_expansion(qa, 0);
        CHECK(std::abs(rqp(N - 1, ea).P) < 1e-13);

        const CheParams qb =
            validate(rng.annulus(0.2, 0.6), g, freev, g - static_cast<double>(N), 0.0);
        const GoursatExpansion eb = init_expansion(qb, 0);
        CHECK(std::abs(rqp(N - 1, eb).P) < 1e-13);
    }
}

TEST_CASE("2N termination cases at N = 2; roots annihilate the rebuilt tail") {
    Rng rng(8899);
    const cplx g = cplx(0.55, 0.0);
    const auto br1 = termination_case(2, TerminationBranch::delta_eq_minus_n, g, cplx(0.4));
    const auto br2 = termination_case(2, TerminationBranch::alpha_minus_gamma_eq_minus_n, g, cplx(0.9));
    CHECK(br1.p_roots.size() == 2);
    CHECK(br2.p_roots.size() == 2);

    for (const auto& tc : {br1, br2}) {
        for (cplx root : tc.p_roots) {
            const CheParams q = validate(root, tc.gamma, tc.delta, tc.alpha, 0.0);
            const GoursatExpansion e = compute_coefficients(init_expansion(q, tc.N + 2), tc.N + 2);
            double big = 0.0;
            for (cplx a : e.coeffs) big = std::max(big, std::abs(a));
            for (int k = tc.N; k <= tc.N + 2; ++k)
                CHECK(std::abs(e.coeffs[k]) <= 1e-8 * big);
        }
    }
}

TEST_CASE("degenerate polynomial input is rejected") {
    CHECK_THROWS_AS(Poly::constant(1.0).roots(), error);
    try {
        find_termination_p(Poly::constant(0.7));
        FAIL("expected DegeneratePolynomial");
    } catch (const error& e) {
        CHECK(e.code() == errc::degenerate_polynomial);
    }
}
