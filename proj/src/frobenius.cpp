#include "cheun/frobenius.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

#include "cheun/hyper.hpp"

namespace cheun {

namespace {

void check_order(int N) {
    if (N < 1) throw std::invalid_argument("series order N must be >= 1");
}

void check_disk(cplx z, double r_max) {
    if (!(r_max > 0.0 && r_max < 1.0))
        throw std::invalid_argument("r_max must lie in (0, 1)");
    if (std::abs(z) > r_max) fail(errc::out_of_disk, "|z| exceeds r_max");
}

cplx resolve_exponent(const CheParams& q, FrobeniusBranch branch) {
    if (branch == FrobeniusBranch::analytic) {
        if (detail::nonpos_int_index(q.gamma))
            fail(errc::resonant_gamma, "gamma a nonpositive integer (logarithmic case)");
        return 0.0;
    }
    if (detail::nonpos_int_index(2.0 - q.gamma))
        fail(errc::resonant_gamma, "2-gamma a nonpositive integer (logarithmic case)");
    return 1.0 - q.gamma;
}

}  // namespace

PowerSeries frobenius_coefficients(const CheParams& q, FrobeniusBranch branch, int N) {
    check_order(N);
    const cplx rho = resolve_exponent(q, branch);

    // From z(z-1)u'' + [4p z(z-1) + gamma (z-1) + delta z] u' + (4 p alpha z - sigma) u = 0
    // with u = sum c_k z^{k+rho}:
    //   (m+1+rho)(m+rho+gamma) c_{m+1}
    //     = [(m+rho)(m+rho-1+gamma+delta-4p) - sigma] c_m + 4p (m-1+rho+alpha) c_{m-1}.
    std::vector<cplx> c(static_cast<std::size_t>(N) + 1);
    c[0] = 1.0;
    for (int m = 0; m < N; ++m) {
        const double md = m;
        const cplx A = (md + 1.0 + rho) * (md + rho + q.gamma);
        const cplx B = (md + rho) * (md + rho - 1.0 + q.gamma + q.delta - 4.0 * q.p) - q.sigma;
        const cplx C = 4.0 * q.p * (md - 1.0 + rho + q.alpha);
        const cplx prev = m >= 1 ? c[m - 1] : cplx(0.0);
        c[m + 1] = (B * c[m] + C * prev) / A;
    }
    return PowerSeries{rho, std::move(c), q};
}

C2Sample eval_series(const PowerSeries& s, cplx z) {
    // Horner for S, S', S'' of the plain series, then the exponent dressing.
    C2Sample t;
    for (std::size_t k = s.coeffs.size(); k-- > 0;) {
        t.d2 = t.d2 * z + 2.0 * t.d1;
        t.d1 = t.d1 * z + t.value;
        t.value = t.value * z + s.coeffs[k];
    }
    if (s.exponent == cplx(0.0)) return t;

    const cplx rho = s.exponent;
    const cplx zr = cpow(z, rho);
    C2Sample out;
    out.value = zr * t.value;
    out.d1 = zr * (rho * t.value / z + t.d1);
    out.d2 = zr * (rho * (rho - 1.0) * t.value / (z * z) + 2.0 * rho * t.d1 / z + t.d2);
    return out;
}

C2Fn series_fn(PowerSeries s) {
    auto shared = std::make_shared<const PowerSeries>(std::move(s));
    return [shared](cplx z) { return eval_series(*shared, z); };
}

C2Sample hc_eval(const CheParams& q, cplx z, int N, double r_max) {
    check_disk(z, r_max);
    return eval_series(frobenius_coefficients(q, FrobeniusBranch::analytic, N), z);
}

C2Fn hc_fn(const CheParams& q, int N, double r_max) {
    auto s = std::make_shared<const PowerSeries>(
        frobenius_coefficients(q, FrobeniusBranch::analytic, N));
    return [s, r_max](cplx z) {
        check_disk(z, r_max);
        return eval_series(*s, z);
    };
}

C2Sample second_solution_eval(const CheParams& q, cplx z, int N, double r_max) {
    check_disk(z, r_max);
    if (std::abs(q.gamma - 1.0) <= 1e-12)
        fail(errc::resonant_gamma, "gamma = 1: the local exponents at 0 coincide");
    return eval_series(frobenius_coefficients(q, FrobeniusBranch::one_minus_gamma, N), z);
}

C2Fn second_solution_fn(const CheParams& q, int N, double r_max) {
    if (std::abs(q.gamma - 1.0) <= 1e-12)
        fail(errc::resonant_gamma, "gamma = 1: the local exponents at 0 coincide");
    auto s = std::make_shared<const PowerSeries>(
        frobenius_coefficients(q, FrobeniusBranch::one_minus_gamma, N));
    return [s, r_max](cplx z) {
        check_disk(z, r_max);
        return eval_series(*s, z);
    };
}

}  // namespace cheun
