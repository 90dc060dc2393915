#include <limits>

#include "cheun/params.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cheun;
using testutil::Rng;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

TEST_CASE("validate accepts admissible tuples and rejects p = 0 / non-finite") {
    CHECK_NOTHROW(validate(0.25, 1.0, 1.0, 0.0, 2.0));
    CHECK_THROWS_WITH_AS(validate(0.0, 1.0, 1.0, 1.0, 1.0), doctest::Contains("ZeroP"), error);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate(0.25, cplx(nan, 0.0), 1.0, 1.0, 1.0), error);
    try {
        validate(0.25, cplx(nan, 0.0), 1.0, 1.0, 1.0);
    } catch (const error& e) {
        CHECK(e.code() == errc::non_finite);
    }
}

TEST_CASE("coeff_f: direct arithmetic and pole guard") {
    const CheParams q = validate(0.25, 1.0, 1.0, 0.0, 2.0);
    CHECK(std::abs(coeff_f(q, 2.0) - cplx(2.5)) < 1e-15);

    const CheParams flat = validate(0.25, 0.0, 0.0, 1.0, 1.0);
    for (cplx z : {cplx(0.3, 0.2), cplx(-2.0, 0.0), cplx(0.5, -0.4)})
        CHECK(std::abs(coeff_f(flat, z) - cplx(1.0)) < 1e-15);

    CHECK_THROWS_AS(coeff_f(q, 0.0), error);
    try {
        coeff_f(q, cplx(0.0, 1e-9));
    } catch (const error& e) {
        CHECK(e.code() == errc::singular_point);
    }
}

TEST_CASE("coeff_g: zero numerator, direct value, pole guard") {
    const CheParams zero = validate(0.25, 1.0, 1.0, 0.0, 0.0);
    for (cplx z : {cplx(0.3, 0.1), cplx(2.0, 0.0), cplx(-0.7, 0.5)})
        CHECK(std::abs(coeff_g(zero, z)) == 0.0);

    const CheParams q = validate(0.25, 1.0, 1.0, 1.0, 0.0);
    CHECK(std::abs(coeff_g(q, 2.0) - cplx(1.0)) < 1e-15);

    CHECK_THROWS_AS(coeff_g(validate(0.25, 1.0, 1.0, 1.0, 1.0), 1.0), error);
}

TEST_CASE("coeff_g has simple poles at 0 and 1 only") {
    const CheParams q = validate(0.35, 0.8, -0.4, 0.9, 1.3);
    // z g(z) -> sigma as z -> 0, (z-1) g(z) -> 4 p alpha - sigma as z -> 1.
    for (double h : {1e-4, 1e-5, 1e-6}) {
        CHECK(std::abs(cplx(h) * coeff_g(q, h) - q.sigma) < 1e-3 * h / 1e-4);
    }
    const cplx at0 = cplx(1e-6) * coeff_g(q, 1e-6);
    CHECK(std::abs(at0 - q.sigma) < 1e-5);
    const cplx at1 = cplx(1e-6) * coeff_g(q, 1.0 + 1e-6);
    CHECK(std::abs(at1 - (4.0 * q.p * q.alpha - q.sigma)) < 1e-5);
}

TEST_CASE("derivative_ode_coeffs: alpha = 0 drops the extra term") {
    const CheParams q = validate(0.25, 0.7, -0.3, 0.0, 1.4);
    for (cplx z : {cplx(0.3, 0.2), cplx(-0.4, 0.6), cplx(2.1, -0.9)}) {
        const OdeCoeffs d = derivative_ode_coeffs(q, z);
        const cplx want = 4.0 * q.p + (q.gamma + 1.0) / z + (q.delta + 1.0) / (z - 1.0);
        CHECK(std::abs(d.a1 - want) == 0.0);
    }
}

TEST_CASE("derivative_ode_coeffs blows up near the extra singularity") {
    const CheParams q = validate(0.3, 0.5, 0.5, 0.8, 0.4);
    const cplx zstar = extra_singularity(q);  // sigma/(4 p alpha)
    const OdeCoeffs d = derivative_ode_coeffs(q, zstar + cplx(1e-7, 0.7e-7));
    CHECK(std::max(std::abs(d.a1), std::abs(d.a0)) > 1e6);
    // Within the guard it is rejected instead.
    CHECK_THROWS_AS(derivative_ode_coeffs(q, zstar + cplx(1e-9, 0.0)), error);
}

TEST_CASE("derivative_ode_coeffs rejects identically vanishing g") {
    const CheParams q = validate(0.25, 1.0, 1.0, 0.0, 0.0);
    try {
        derivative_ode_coeffs(q, cplx(0.3, 0.1));
        FAIL("expected GZero");
    } catch (const error& e) {
        CHECK(e.code() == errc::g_zero);
    }
}

TEST_CASE("derivative_ode_coeffs agrees with (f - g'/g, g + f' - f g'/g)") {
    Rng rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        const CheParams q = testutil::draw_generic(rng);
        for (int i = 0; i < 10; ++i) {
            const cplx z = rng.annulus(0.15, 0.45);
            if (std::abs(4.0 * q.p * q.alpha) > 1e-12 &&
                std::abs(z - q.sigma / (4.0 * q.p * q.alpha)) < 0.05)
                continue;
            cplx g;
            try {
                g = coeff_g(q, z);
            } catch (const error&) {
                continue;
            }
            if (std::abs(g) < 1e-6) continue;
            const cplx lgp = coeff_g_prime(q, z) / g;
            const cplx f = coeff_f(q, z);
            const OdeCoeffs d = derivative_ode_coeffs(q, z);
            CHECK(rel(d.a1, f - lgp) < 1e-12);
            CHECK(rel(d.a0, g + coeff_f_prime(q, z) - f * lgp) < 1e-12);
        }
    }
}

TEST_CASE("derivative_ode_coeffs vs finite differences of log g") {
    Rng rng(77);
    for (int trial = 0; trial < 12; ++trial) {
        const CheParams q = testutil::draw_generic(rng);
        const cplx z = rng.annulus(0.2, 0.4);
        cplx g;
        try {
            g = coeff_g(q, z);
        } catch (const error&) {
            continue;
        }
        if (std::abs(g) < 1e-3) continue;
        const double h = 1e-6;
        const cplx lgp_fd = (coeff_g(q, z + h) - coeff_g(q, z - h)) / (2.0 * h) / g;
        OdeCoeffs d;
        try {
            d = derivative_ode_coeffs(q, z);
        } catch (const error&) {
            continue;
        }
        CHECK(rel(d.a1, coeff_f(q, z) - lgp_fd) < 1e-8);
        CHECK(rel(d.a0, g + coeff_f_prime(q, z) - coeff_f(q, z) * lgp_fd) < 1e-8);
    }
}

TEST_CASE("analytic f' and g' match finite differences") {
    Rng rng(5150);
    for (int trial = 0; trial < 10; ++trial) {
        const CheParams q = testutil::draw_generic(rng);
        const cplx z = rng.annulus(0.2, 0.45);
        const double h = 1e-6;
        const cplx fp_fd = (coeff_f(q, z + h) - coeff_f(q, z - h)) / (2.0 * h);
        const cplx gp_fd = (coeff_g(q, z + h) - coeff_g(q, z - h)) / (2.0 * h);
        CHECK(std::abs(coeff_f_prime(q, z) - fp_fd) < 1e-7 * (1.0 + std::abs(fp_fd)));
        CHECK(std::abs(coeff_g_prime(q, z) - gp_fd) < 1e-7 * (1.0 + std::abs(gp_fd)));
    }
}
