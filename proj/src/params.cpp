#include "cheun/params.hpp"

namespace cheun {

namespace {

void guard_regular_points(cplx z) {
    if (std::abs(z) <= pole_guard) fail(errc::singular_point, "z at the pole z = 0");
    if (std::abs(z - 1.0) <= pole_guard) fail(errc::singular_point, "z at the pole z = 1");
}

}  // namespace

CheParams validate(cplx p, cplx gamma, cplx delta, cplx alpha, cplx sigma) {
    if (p == cplx(0.0)) fail(errc::zero_p, "p = 0 leaves the confluent Heun class");
    for (cplx v : {p, gamma, delta, alpha, sigma})
        if (!is_finite(v)) fail(errc::non_finite, "parameters must be finite");
    return CheParams{p, gamma, delta, alpha, sigma};
}

cplx coeff_f(const CheParams& q, cplx z) {
    guard_regular_points(z);
    return 4.0 * q.p + q.gamma / z + q.delta / (z - 1.0);
}

cplx coeff_g(const CheParams& q, cplx z) {
    guard_regular_points(z);
    return (4.0 * q.p * q.alpha * z - q.sigma) / (z * (z - 1.0));
}

cplx coeff_f_prime(const CheParams& q, cplx z) {
    guard_regular_points(z);
    return -q.gamma / (z * z) - q.delta / ((z - 1.0) * (z - 1.0));
}

cplx coeff_g_prime(const CheParams& q, cplx z) {
    guard_regular_points(z);
    const cplx num = 4.0 * q.p * q.alpha * z - q.sigma;
    const cplx den = z * (z - 1.0);
    return (4.0 * q.p * q.alpha * den - num * (2.0 * z - 1.0)) / (den * den);
}

bool has_extra_singularity(const CheParams& q) {
    return 4.0 * q.p * q.alpha != cplx(0.0);
}

cplx extra_singularity(const CheParams& q) {
    if (!has_extra_singularity(q))
        fail(errc::not_applicable, "4 p alpha = 0: no extra singular point");
    return q.sigma / (4.0 * q.p * q.alpha);
}

OdeCoeffs derivative_ode_coeffs(const CheParams& q, cplx z) {
    guard_regular_points(z);
    const cplx fourpa = 4.0 * q.p * q.alpha;
    if (fourpa == cplx(0.0) && q.sigma == cplx(0.0))
        fail(errc::g_zero, "g vanishes identically (alpha = 0, sigma = 0)");
    if (fourpa != cplx(0.0) && std::abs(z - q.sigma / fourpa) <= pole_guard)
        fail(errc::singular_point, "z at the extra singularity sigma/(4 p alpha)");

    const cplx num = fourpa * z - q.sigma;  // numerator of g; nonzero by the guards
    const cplx a1 = 4.0 * q.p + (q.gamma + 1.0) / z + (q.delta + 1.0) / (z - 1.0)
                    - fourpa / num;
    const cplx log_g_prime = fourpa / num - 1.0 / z - 1.0 / (z - 1.0);
    const cplx a0 = -q.gamma / (z * z) - q.delta / ((z - 1.0) * (z - 1.0))
                    + num / (z * (z - 1.0))
                    - log_g_prime * (4.0 * q.p + q.gamma / z + q.delta / (z - 1.0));
    return {a1, a0};
}

}  // namespace cheun
