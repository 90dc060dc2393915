#include "cheun/relations.hpp"

#include <algorithm>
#include <cmath>

#include "cheun/frobenius.hpp"
#include "cheun/hyper.hpp"

namespace cheun {

CaseTag classify(const CheParams& q, double tol_class) {
    const cplx fourpa = 4.0 * q.p * q.alpha;
    CaseTag tag;
    tag.alpha_zero = std::abs(q.alpha) <= tol_class;
    tag.sigma_zero = std::abs(q.sigma) <= tol_class;
    tag.sigma_eq_4p_alpha = std::abs(q.sigma - fourpa) <= tol_class * (1.0 + std::abs(fourpa));
    return tag;
}

DerivRelation relation_alpha_zero(const CheParams& q, double tol_class) {
    if (!classify(q, tol_class).alpha_zero)
        fail(errc::not_applicable, "alpha != 0");
    const cplx sigma1 = q.sigma + 4.0 * q.p - q.gamma - q.delta;
    return DerivRelation{
        ReductionCase::alpha_zero,
        0.0,
        0,
        validate(q.p, q.gamma + 1.0, q.delta + 1.0, 2.0, sigma1),
        -q.sigma / q.gamma,
    };
}

DerivRelation relation_sigma_zero(const CheParams& q, SigmaZeroBranch branch,
                                  double tol_class) {
    if (!classify(q, tol_class).sigma_zero)
        fail(errc::not_applicable, "sigma != 0");
    if (branch == SigmaZeroBranch::s_minus_gamma && std::abs(q.gamma + 1.0) <= tol_class)
        fail(errc::degenerate_branches, "gamma = -1 makes the two s values coincide");
    // s solves -s^2 + s(1-gamma) + gamma = 0, roots 1 and -gamma.
    const cplx s = branch == SigmaZeroBranch::s_one ? cplx(1.0) : -q.gamma;
    const cplx sigma1 = s * (4.0 * q.p - q.gamma - q.delta - s);
    const cplx scale = branch == SigmaZeroBranch::s_one
                           ? 4.0 * q.p * q.alpha / (1.0 + q.gamma)  // 2 c_2 of the source series
                           : 1.0 - q.gamma;  // leading slope of z^{1-gamma}(1 + ...)
    return DerivRelation{
        ReductionCase::sigma_zero,
        s,
        0,
        validate(q.p, q.gamma + 2.0 * s, q.delta + 1.0, s + q.alpha + 1.0, sigma1),
        scale,
    };
}

DerivRelation relation_sigma_4palpha(const CheParams& q, Sigma4pAlphaBranch branch,
                                     double tol_class) {
    if (!classify(q, tol_class).sigma_eq_4p_alpha)
        fail(errc::not_applicable, "sigma != 4 p alpha");
    if (branch == Sigma4pAlphaBranch::s_minus_delta && std::abs(q.delta + 1.0) <= tol_class)
        fail(errc::degenerate_branches, "delta = -1 makes the two s values coincide");
    // s solves s^2 + s(delta-1) - delta = 0, roots 1 and -delta.
    const cplx s = branch == Sigma4pAlphaBranch::s_one ? cplx(1.0) : -q.delta;
    const cplx sigma1 = 4.0 * q.p * (1.0 + q.alpha) - s * (s + q.gamma + q.delta);
    const cplx scale = branch == Sigma4pAlphaBranch::s_one
                           ? q.sigma / q.gamma   // -c_1 of the source series
                           : 1.0 - q.delta;      // z = 1 local normalization, coefficient-level only
    return DerivRelation{
        ReductionCase::sigma_eq_4p_alpha,
        s,
        1,
        validate(q.p, q.gamma + 1.0, q.delta + 2.0 * s, 1.0 + s + q.alpha, sigma1),
        scale,
    };
}

OdeCoeffs transformed_coeffs(const CheParams& q, const DerivRelation& rel, cplx z) {
    const OdeCoeffs d = derivative_ode_coeffs(q, z);
    if (rel.s == cplx(0.0)) return d;
    const cplx w = z - (rel.prefactor_center == 1 ? cplx(1.0) : cplx(0.0));
    const cplx lp = rel.s / w;                        // phi'/phi
    const cplx lpp = rel.s * (rel.s - 1.0) / (w * w); // phi''/phi
    return {d.a1 + 2.0 * lp, d.a0 + d.a1 * lp + lpp};
}

namespace {

double rel_dev(cplx x, cplx y) {
    return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace

double verify_relation_coeffs(const CheParams& q, const DerivRelation& rel,
                              std::span<const cplx> zs) {
    double dev = 0.0;
    for (cplx z : zs) {
        const OdeCoeffs got = transformed_coeffs(q, rel, z);
        dev = std::max(dev, rel_dev(got.a1, coeff_f(rel.target, z)));
        dev = std::max(dev, rel_dev(got.a0, coeff_g(rel.target, z)));
    }
    return dev;
}

RatioCheck verify_relation_solutions(const CheParams& q, const DerivRelation& rel,
                                     std::span<const cplx> zs, int series_order) {
    if (zs.empty()) fail(errc::not_applicable, "no evaluation points");
    C2Fn source;
    if (rel.reduction == ReductionCase::sigma_zero && rel.s != cplx(1.0)) {
        source = second_solution_fn(q, series_order);
    } else if (rel.reduction == ReductionCase::sigma_eq_4p_alpha && rel.s != cplx(1.0)) {
        fail(errc::not_applicable,
             "s = -delta tracks the z = 1 local solution; coefficient-level only");
    } else {
        source = hc_fn(q, series_order);
    }
    const C2Fn target = hc_fn(rel.target, series_order);

    std::vector<cplx> ratios;
    ratios.reserve(zs.size());
    for (cplx z : zs) {
        cplx pref = 1.0;
        if (rel.s != cplx(0.0))
            pref = cpow(z - (rel.prefactor_center == 1 ? cplx(1.0) : cplx(0.0)), rel.s);
        ratios.push_back(source(z).d1 / (pref * target(z).value));
    }
    cplx mean = 0.0;
    for (cplx r : ratios) mean += r;
    mean /= static_cast<double>(ratios.size());
    double dev = 0.0;
    for (cplx r : ratios) dev = std::max(dev, std::abs(r - mean) / std::abs(mean));
    return {mean, dev};
}

CheParams symmetry_map(const CheParams& q) {
    return validate(-q.p, q.delta, q.gamma, q.alpha, q.sigma - 4.0 * q.p * q.alpha);
}

}  // namespace cheun
