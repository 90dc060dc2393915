#include "cheun/goursat.hpp"

#include <cmath>
#include <stdexcept>

#include "cheun/hyper.hpp"
#include "cheun/residual.hpp"

namespace cheun {

GoursatExpansion init_expansion(const CheParams& q, int requested_N, double tol_class) {
    if (requested_N < 0) throw std::invalid_argument("requested_N must be >= 0");
    if (std::abs(q.sigma) > tol_class)
        fail(errc::not_sigma_zero, "expansion requires the sigma = 0 locus");
    // R_n = -n (delta - gamma + n) under this initialization; it vanishes
    // when gamma - delta is a positive integer n <= N.
    for (int n = 1; n <= requested_N; ++n)
        if (std::abs(q.delta - q.gamma + static_cast<double>(n)) <= tol_class)
            fail(errc::degenerate_rn, "gamma - delta a positive integer within range");
    GoursatExpansion e;
    e.params = q;
    e.gamma0 = 1.0 + q.delta - q.gamma;
    e.alpha0 = 1.0 + q.alpha - q.gamma;
    e.s0 = -4.0 * q.p;
    return e;
}

namespace {

cplx r_coef(int n, const GoursatExpansion& e) {
    const cplx gn = e.gamma0 + static_cast<double>(n);
    return (1.0 + e.params.delta - e.params.gamma - gn) * (gn - 1.0);
}

cplx q_coef(int n, const GoursatExpansion& e) {
    const CheParams& q = e.params;
    const cplx gn = e.gamma0 + static_cast<double>(n);
    return 4.0 * q.p * (q.gamma + q.alpha - q.delta + gn) - q.gamma * q.delta -
           (1.0 + q.delta - q.gamma - gn) * (gn - 1.0);
}

cplx p_coef(int n, const GoursatExpansion& e) {
    const CheParams& q = e.params;
    const cplx gn = e.gamma0 + static_cast<double>(n);
    const cplx an = e.alpha0 + static_cast<double>(n);
    if (gn == cplx(0.0)) fail(errc::zero_gamma_n, "gamma_n = 0 in P_n");
    return -4.0 * q.p * (q.gamma + gn) * an / gn;
}

}  // namespace

Rqp rqp(int n, const GoursatExpansion& e) {
    return Rqp{r_coef(n, e), q_coef(n, e), p_coef(n, e)};
}

GoursatExpansion compute_coefficients(GoursatExpansion e, int N) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    e.coeffs.assign(static_cast<std::size_t>(N) + 1, cplx(0.0));
    e.coeffs[0] = 1.0;
    for (int n = 1; n <= N; ++n) {
        const cplx R = r_coef(n, e);
        if (R == cplx(0.0)) fail(errc::degenerate_rn, "R_n = 0 inside the recurrence");
        cplx acc = q_coef(n - 1, e) * e.coeffs[n - 1];
        if (n >= 2) acc += p_coef(n - 2, e) * e.coeffs[n - 2];
        e.coeffs[n] = -acc / R;
    }
    return e;
}

namespace {

void require_coeffs(const GoursatExpansion& e) {
    if (e.coeffs.empty())
        throw std::logic_error("expansion coefficients have not been computed");
}

}  // namespace

C2Sample eval_w(const GoursatExpansion& e, cplx z, const SeriesControl& ctl) {
    require_coeffs(e);
    const cplx x = e.s0 * z;
    C2Sample out;
    for (std::size_t n = 0; n < e.coeffs.size(); ++n) {
        const cplx an = e.alpha0 + static_cast<double>(n);
        const cplx gn = e.gamma0 + static_cast<double>(n);
        const C2Sample t = f11(an, gn, x, ctl);
        out.value += e.coeffs[n] * t.value;
        out.d1 += e.coeffs[n] * e.s0 * t.d1;
        out.d2 += e.coeffs[n] * e.s0 * e.s0 * t.d2;
    }
    return out;
}

C2Sample eval_u(const GoursatExpansion& e, cplx z, const SeriesControl& ctl) {
    require_coeffs(e);
    if (!e.C0) fail(errc::c0_undetermined, "set C0 (0 for a terminated series) first");
    const cplx g = e.params.gamma;
    if (std::abs(g - 1.0) <= 1e-12)
        fail(errc::degenerate_gamma, "gamma = 1 degenerates z^{1-gamma}");
    if (detail::nonpos_int_index(2.0 - g))
        fail(errc::pole_parameter, "lower parameter 2-gamma hits a nonpositive integer");

    const cplx x = e.s0 * z;
    const cplx zg = cpow(z, 1.0 - g);   // z^{1-gamma}
    const cplx zgm = zg / z;            // z^{-gamma}
    C2Sample out;
    out.value = *e.C0;
    for (std::size_t n = 0; n < e.coeffs.size(); ++n) {
        const cplx an = e.alpha0 + static_cast<double>(n);
        const cplx gn = e.gamma0 + static_cast<double>(n);
        const C2Sample F = f22(1.0 - g, an, 2.0 - g, gn, x, ctl);
        const cplx cn = e.coeffs[n];
        out.value += cn * zg * F.value;
        out.d1 += cn * ((1.0 - g) * zgm * F.value + e.s0 * zg * F.d1);
        out.d2 += cn * ((1.0 - g) * (-g) * zgm / z * F.value +
                        2.0 * (1.0 - g) * e.s0 * zgm * F.d1 + e.s0 * e.s0 * zg * F.d2);
    }
    return out;
}

cplx determine_C0(const GoursatExpansion& e, cplx z_star, const SeriesControl& ctl) {
    require_coeffs(e);
    const cplx g = coeff_g(e.params, z_star);
    if (std::abs(g) <= 1e-12)
        fail(errc::g_zero, "g vanishes (alpha = 0 on this locus): C0 unconstrained");
    GoursatExpansion probe = e;
    probe.C0 = 0.0;
    const cplx raw = che_raw_residual(e.params, eval_u(probe, z_star, ctl), z_star);
    return -raw / g;
}

CoeffFn goursat_w_a1(const CheParams& q) {
    return [q](cplx z) { return 4.0 * q.p - q.gamma / z + (q.delta + 1.0) / (z - 1.0); };
}

CoeffFn goursat_w_a0(const CheParams& q) {
    return [q](cplx z) {
        return (4.0 * q.p * (1.0 + q.alpha - q.gamma) * z - q.gamma * q.delta +
                4.0 * q.p * q.gamma) /
               (z * (z - 1.0));
    };
}

namespace {

CheParams branch_params(int N, TerminationBranch branch, cplx gamma, cplx free_value) {
    // p enters the recurrence only linearly; any nonzero placeholder works
    // for validation of the remaining fields.
    if (branch == TerminationBranch::delta_eq_minus_n)
        return validate(1.0, gamma, -static_cast<double>(N), free_value, 0.0);
    return validate(1.0, gamma, free_value, gamma - static_cast<double>(N), 0.0);
}

}  // namespace

Poly termination_polynomial(int N, TerminationBranch branch, cplx gamma, cplx free_value) {
    if (N < 1) throw std::invalid_argument("termination order N must be >= 1");
    const CheParams q = branch_params(N, branch, gamma, free_value);
    const cplx gamma0 = 1.0 + q.delta - q.gamma;
    const cplx alpha0 = 1.0 + q.alpha - q.gamma;

    // With gamma_n = gamma0 + n:  R_n = -n (delta - gamma + n)  (p-free),
    //   Q_n = 4p (1 + alpha + n) + n (delta - gamma + n) - gamma delta,
    //   P_n = -4p (gamma + gamma_n)(alpha0 + n)/gamma_n.
    std::vector<Poly> a;
    a.push_back(Poly::constant(1.0));
    for (int n = 1; n <= N; ++n) {
        const cplx R = -static_cast<double>(n) * (q.delta - q.gamma + static_cast<double>(n));
        if (R == cplx(0.0)) fail(errc::degenerate_rn, "R_n = 0 inside the recurrence");
        const double nm1 = n - 1.0;
        const Poly Q({nm1 * (q.delta - q.gamma + nm1) - q.gamma * q.delta,
                      4.0 * (1.0 + q.alpha + nm1)});
        Poly acc = Q * a[n - 1];
        if (n >= 2) {
            const double nm2 = n - 2.0;
            const cplx gn = gamma0 + nm2;
            if (gn == cplx(0.0)) fail(errc::zero_gamma_n, "gamma_n = 0 in P_n");
            const Poly P({0.0, -4.0 * (q.gamma + gn) * (alpha0 + nm2) / gn});
            acc = acc + P * a[n - 2];
        }
        acc *= -1.0 / R;
        a.push_back(acc);
    }
    return a[N];
}

std::vector<cplx> find_termination_p(const Poly& poly) {
    std::vector<cplx> roots = poly.roots();
    double scale = 0.0;
    for (const cplx& c : poly.coefficients()) scale = std::max(scale, std::abs(c));
    for (const cplx& r : roots)
        if (std::abs(poly.eval(r)) > 1e-8 * scale * std::max(1.0, std::pow(std::abs(r), poly.degree())))
            fail(errc::no_convergence, "root fails to annihilate the polynomial");
    return roots;
}

TerminationCase termination_case(int N, TerminationBranch branch, cplx gamma,
                                 cplx free_value) {
    const CheParams q = branch_params(N, branch, gamma, free_value);
    TerminationCase tc;
    tc.N = N;
    tc.branch = branch;
    tc.gamma = q.gamma;
    tc.delta = q.delta;
    tc.alpha = q.alpha;
    tc.aN = termination_polynomial(N, branch, gamma, free_value);
    tc.p_roots = find_termination_p(tc.aN);
    return tc;
}

}  // namespace cheun
