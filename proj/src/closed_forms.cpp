#include "cheun/closed_forms.hpp"

#include <array>
#include <cmath>

#include "cheun/hyper.hpp"
#include "cheun/residual.hpp"

namespace cheun {

namespace {

void guard_lower_params(std::initializer_list<cplx> bs) {
    for (cplx b : bs)
        if (detail::nonpos_int_index(b))
            fail(errc::pole_parameter, "1F1/2F2 lower parameter collides with a nonpositive integer");
}

// Solves Res(u + c) = Res(u) + c g(z) = 0 for the additive constant at the
// first usable candidate point (g not tiny, all branch evaluations finite).
cplx solve_additive_constant(const CheParams& locus, const C2Fn& tail) {
    constexpr int n_candidates = 8;
    for (int k = 0; k < n_candidates; ++k) {
        const double th = 2.0 * 3.14159265358979323846 * (k + 0.37) / n_candidates;
        const cplx z = 0.31 * cplx(std::cos(th), std::sin(th));
        try {
            const cplx g = coeff_g(locus, z);
            if (std::abs(g) < 1e-8) continue;
            const cplx raw = che_raw_residual(locus, tail(z), z);
            const cplx c = -raw / g;
            if (!is_finite(c)) continue;
            return c;
        } catch (const error&) {
            continue;
        }
    }
    fail(errc::no_convergence, "no usable point to fix the integration constant");
}

}  // namespace

ClosedFormFamily case1_family(cplx p, cplx gamma) {
    if (p == cplx(0.0)) fail(errc::zero_p, "p = 0");
    if (std::abs(gamma) <= 1e-12 || std::abs(gamma - 1.0) <= 1e-12)
        fail(errc::degenerate_gamma, "gamma in {0, 1} degenerates the powers");
    const cplx g = gamma;
    const cplx sigma = 4.0 * p + g - 1.0;
    ClosedFormFamily fam;
    fam.which = ClosedFormCase::case1_alpha_zero;
    fam.locus = validate(p, g, -1.0, 0.0, sigma);

    // All four branches are elementary in t = -4 p z.
    fam.u1 = [=](cplx z) {
        const cplx t = -4.0 * p * z;
        const cplx et = std::exp(t), tmg = cpow(t, -g);
        const cplx B = t * t + 2.0 * (1.0 - g) * t + g * (g - 1.0);
        return C2Sample{et * tmg * t, -4.0 * p * et * tmg * (t + 1.0 - g),
                        16.0 * p * p * et * tmg / t * B};
    };
    fam.w1 = [=](cplx z) {
        const cplx t = -4.0 * p * z;
        const cplx et = std::exp(t), tmg = cpow(t, -g);
        const cplx B = t * t + 2.0 * (1.0 - g) * t + g * (g - 1.0);
        const cplx B3 = t * t * t + 3.0 * (1.0 - g) * t * t + 3.0 * g * (g - 1.0) * t -
                        g * (g * g - 1.0);
        return C2Sample{(4.0 * p * z + g - 1.0) * et * tmg, 4.0 * p * et * tmg / t * B,
                        -16.0 * p * p * et * tmg / (t * t) * B3};
    };
    fam.w2 = c2_mul(c2_exp_affine(-4.0 * p, 0.0),
                    c2_compose_affine(f11_fn(g - 1.0, g + 1.0), 4.0 * p, 0.0));

    // u2 = c + kappa e^{-4pz} (-4pz)^{1-gamma} Gamma(gamma, -4pz); the paper's
    // scaling kappa = -sigma/(4p). sigma = 0 makes g vanish identically and
    // the constant unconstrained; u2 is then the constant solution itself.
    const cplx kappa = -sigma / (4.0 * p);
    C2Fn tail = [=](cplx z) {
        if (kappa == cplx(0.0)) return C2Sample{};
        const cplx t = -4.0 * p * z;
        const cplx G = upper_gamma(g, t);
        const cplx et = std::exp(t), tmg = cpow(t, -g);
        const cplx B = t * t + 2.0 * (1.0 - g) * t + g * (g - 1.0);
        C2Sample s;
        s.value = kappa * (et * tmg * t * G);
        s.d1 = kappa * (-4.0 * p) * (et * tmg * (t + 1.0 - g) * G - 1.0);
        s.d2 = kappa * 16.0 * p * p * (et * tmg / t * B * G - (t + 1.0 - g) / t);
        return s;
    };
    fam.u2_constant = std::abs(sigma) <= 1e-12 ? cplx(1.0)
                                               : solve_additive_constant(fam.locus, tail);
    fam.u2 = c2_add(c2_const(fam.u2_constant), std::move(tail));

    fam.w_a1 = [=](cplx z) { return 4.0 * p + (g + 1.0) / z; };
    fam.w_a0 = [=](cplx z) { return 8.0 * p / z; };
    return fam;
}

ClosedFormFamily case2_family(cplx p, cplx alpha) {
    if (p == cplx(0.0)) fail(errc::zero_p, "p = 0");
    if (std::abs(alpha) <= 1e-12 || std::abs(alpha + 1.0) <= 1e-12)
        fail(errc::degenerate_alpha, "alpha in {0, -1}");
    const cplx a = alpha;
    const cplx b = 4.0 * p * (1.0 + a);  // beta = 4p(1+alpha) = -gamma
    guard_lower_params({b, -b, 1.0 - b, 2.0 - b});

    ClosedFormFamily fam;
    fam.which = ClosedFormCase::case2_sigma_zero;
    fam.locus = validate(p, -b, -1.0, a, 0.0);

    fam.w1 = c2_mul(c2_pow_shift(0.0, 1.0 - b),
                    c2_mul(c2_exp_affine(-4.0 * p, 0.0),
                           c2_compose_affine(f11_fn(-a - b, 2.0 - b), 4.0 * p, 0.0)));
    fam.w2 = c2_mul(c2_exp_affine(-4.0 * p, 0.0),
                    c2_compose_affine(f11_fn(-1.0 - a, b), 4.0 * p, 0.0));

    // The two-term combination of the explicit solution (C2 branch).
    fam.u2 = c2_add(c2_compose_affine(f11_fn(a, -b), -4.0 * p, 0.0),
                    c2_scale(-a / (1.0 + a),
                             c2_mul(c2_poly({0.0, 1.0}),
                                    c2_compose_affine(f11_fn(1.0 + a, 1.0 - b), -4.0 * p, 0.0))));

    // Term-wise integration of z^{-gamma} w1 = z 1F1(2+a; 2-b; -4pz):
    // the antiderivative is (z^2/2) 2F2(2+a, 2; 2-b, 3; -4pz) plus a constant
    // fixed by the equation.
    C2Fn primitive = c2_mul(c2_poly({0.0, 0.0, 0.5}),
                            c2_compose_affine(f22_fn(2.0 + a, 2.0, 2.0 - b, 3.0), -4.0 * p, 0.0));
    fam.u1_constant = solve_additive_constant(fam.locus, primitive);
    fam.u1 = c2_add(c2_const(fam.u1_constant), std::move(primitive));

    fam.w_a1 = [=](cplx z) { return 4.0 * p + b / z; };
    fam.w_a0 = [=](cplx z) { return b * (1.0 + 4.0 * p) / z; };
    return fam;
}

ClosedFormFamily case3_family(cplx p, cplx alpha) {
    if (p == cplx(0.0)) fail(errc::zero_p, "p = 0");
    if (std::abs(alpha) <= 1e-12 || std::abs(alpha + 1.0) <= 1e-12)
        fail(errc::degenerate_alpha, "alpha in {0, -1}");
    const cplx a = alpha;
    const cplx b = 4.0 * p * (1.0 + a);  // beta = 4p(1+alpha) = delta
    guard_lower_params({-b, b, 1.0 + b, 2.0 + b});

    ClosedFormFamily fam;
    fam.which = ClosedFormCase::case3_sigma_4p_alpha;
    fam.locus = validate(p, -1.0, b, a, 4.0 * p * a);

    // Same structure as case 2 in the variable z - 1 with p -> -p.
    fam.w1 = c2_mul(c2_pow_shift(1.0, 1.0 + b),
                    c2_mul(c2_exp_affine(-4.0 * p, 4.0 * p),
                           c2_compose_affine(f11_fn(-a + b, 2.0 + b), 4.0 * p, -4.0 * p)));
    fam.w2 = c2_mul(c2_exp_affine(-4.0 * p, 4.0 * p),
                    c2_compose_affine(f11_fn(-1.0 - a, -b), 4.0 * p, -4.0 * p));

    fam.u2 = c2_add(c2_compose_affine(f11_fn(a, b), -4.0 * p, 4.0 * p),
                    c2_scale(a / (1.0 + a),
                             c2_mul(c2_poly({-1.0, 1.0}),
                                    c2_compose_affine(f11_fn(1.0 + a, 1.0 + b), -4.0 * p, 4.0 * p))));

    C2Fn primitive =
        c2_mul(c2_mul(c2_poly({-1.0, 1.0}), c2_poly({-0.5, 0.5})),
               c2_compose_affine(f22_fn(2.0 + a, 2.0, 2.0 + b, 3.0), -4.0 * p, 4.0 * p));
    fam.u1_constant = solve_additive_constant(fam.locus, primitive);
    fam.u1 = c2_add(c2_const(fam.u1_constant), std::move(primitive));

    fam.w_a1 = [=](cplx z) { return 4.0 * p - b / (z - 1.0); };
    fam.w_a0 = [=](cplx z) { return b * (1.0 - 4.0 * p) / (z - 1.0); };
    return fam;
}

ClosedFormFamily case3_family_via_symmetry(cplx p, cplx alpha) {
    ClosedFormFamily base = case2_family(-p, alpha);
    ClosedFormFamily fam;
    fam.which = ClosedFormCase::case3_sigma_4p_alpha;
    fam.locus = validate(p, -1.0, 4.0 * p * (1.0 + alpha), alpha, 4.0 * p * alpha);
    fam.w1 = c2_compose_reflect(base.w1);
    fam.w2 = c2_compose_reflect(base.w2);
    fam.u1 = c2_compose_reflect(base.u1);
    fam.u2 = c2_compose_reflect(base.u2);
    fam.u1_constant = base.u1_constant;
    fam.u2_constant = base.u2_constant;
    fam.w_a1 = [a1 = base.w_a1](cplx z) { return -a1(1.0 - z); };
    fam.w_a0 = [a0 = base.w_a0](cplx z) { return a0(1.0 - z); };
    return fam;
}

}  // namespace cheun
