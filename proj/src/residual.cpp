#include "cheun/residual.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace cheun {

cplx raw_residual(cplx a1, cplx a0, const C2Sample& s) {
    return s.d2 + a1 * s.d1 + a0 * s.value;
}

cplx che_raw_residual(const CheParams& q, const C2Sample& s, cplx z) {
    return raw_residual(coeff_f(q, z), coeff_g(q, z), s);
}

namespace {

ResidualReport build_report(const CoeffFn& a1, const CoeffFn& a0, const C2Fn& fn,
                            std::span<const cplx> zs) {
    ResidualReport rep;
    rep.points.assign(zs.begin(), zs.end());
    std::vector<cplx> raw(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const C2Sample s = fn(zs[i]);
        const cplx c1 = a1(zs[i]), c0 = a0(zs[i]);
        raw[i] = raw_residual(c1, c0, s);
        rep.scale = std::max({rep.scale, std::abs(s.d2), std::abs(c1 * s.d1),
                              std::abs(c0 * s.value)});
    }
    rep.residuals.resize(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i)
        rep.residuals[i] = rep.scale > 0.0 ? std::abs(raw[i]) / rep.scale : 0.0;
    rep.max_residual =
        rep.residuals.empty() ? 0.0 : *std::max_element(rep.residuals.begin(), rep.residuals.end());
    return rep;
}

}  // namespace

ResidualReport generic_residual(const CoeffFn& a1, const CoeffFn& a0, const C2Fn& fn,
                                std::span<const cplx> zs) {
    return build_report(a1, a0, fn, zs);
}

ResidualReport che_residual(const CheParams& q, const C2Fn& fn, std::span<const cplx> zs) {
    for (cplx z : zs)
        if (std::abs(z) < 1e-3 || std::abs(z - 1.0) < 1e-3)
            fail(errc::singular_point, "residual point within 1e-3 of a singular point");
    return build_report([&q](cplx z) { return coeff_f(q, z); },
                        [&q](cplx z) { return coeff_g(q, z); }, fn, zs);
}

namespace {

constexpr int taylor_order = 20;

double segment_distance(cplx a, cplx b, cplx s) {
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    double t = len2 > 0.0 ? ((s - a) * std::conj(ab)).real() / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(a + t * ab - s);
}

// Taylor coefficients of u about zc up to taylor_order, from u(zc), u'(zc).
// f and g are a constant plus simple poles at 0 and 1:
//   f = 4p + gamma/z + delta/(z-1),  g = sigma/z + (4 p alpha - sigma)/(z-1),
// so 1/(zc+h) = sum (-1)^k h^k / zc^{k+1} gives their local expansions.
void local_coeffs(const CheParams& q, cplx zc, cplx u, cplx du,
                  std::array<cplx, taylor_order + 1>& b) {
    std::array<cplx, taylor_order + 1> f{}, g{};
    const cplx r = 4.0 * q.p * q.alpha - q.sigma;
    cplx pz = 1.0 / zc, pz1 = 1.0 / (zc - 1.0);
    double sign = 1.0;
    for (int k = 0; k <= taylor_order; ++k) {
        f[k] = sign * (q.gamma * pz + q.delta * pz1);
        g[k] = sign * (q.sigma * pz + r * pz1);
        pz /= zc;
        pz1 /= zc - 1.0;
        sign = -sign;
    }
    f[0] += 4.0 * q.p;

    b[0] = u;
    b[1] = du;
    for (int k = 0; k + 2 <= taylor_order; ++k) {
        cplx acc = 0.0;
        for (int j = 0; j <= k; ++j)
            acc += f[j] * (static_cast<double>(k + 1 - j)) * b[k + 1 - j] + g[j] * b[k - j];
        b[k + 2] = -acc / (static_cast<double>(k + 2) * static_cast<double>(k + 1));
    }
}

}  // namespace

std::pair<cplx, cplx> taylor_oracle(const CheParams& q, cplx z0, cplx u0, cplx du0,
                                    cplx z_target) {
    const double d_end = std::min({std::abs(z0), std::abs(z0 - 1.0), std::abs(z_target),
                                   std::abs(z_target - 1.0)});
    const double required = std::max(1e-3, std::min(0.05, 0.9 * d_end));
    if (std::min(segment_distance(z0, z_target, 0.0), segment_distance(z0, z_target, 1.0)) <
        required)
        fail(errc::path_too_close_to_singularity, "integration path too close to 0 or 1");

    cplx z = z0, u = u0, du = du0;
    const cplx dir = z_target - z0;
    const double total = std::abs(dir);
    if (total == 0.0) return {u, du};
    const cplx unit = dir / total;

    double travelled = 0.0;
    std::array<cplx, taylor_order + 1> b{};
    while (total - travelled > 1e-12 * total) {
        const double radius = std::min(std::abs(z), std::abs(z - 1.0));
        local_coeffs(q, z, u, du, b);
        double h = std::min(total - travelled, 0.2 * radius);
        for (;;) {
            if (h < 1e-13 * std::max(1.0, std::abs(z)))
                fail(errc::step_underflow, "Taylor step collapsed");
            // Scale and order-20 tail estimate at step size h.
            double scale = 0.0, hk = 1.0;
            for (int k = 0; k <= taylor_order; ++k) {
                scale = std::max(scale, std::abs(b[k]) * hk);
                hk *= h;
            }
            const double tail = std::abs(b[taylor_order - 1]) * std::pow(h, taylor_order - 1) +
                                std::abs(b[taylor_order]) * std::pow(h, taylor_order);
            if (tail <= 1e-13 * std::max(scale, 1e-280)) break;
            h *= 0.6;
        }
        const cplx step = h * unit;
        cplx nu = 0.0, ndu = 0.0;
        for (int k = taylor_order; k >= 1; --k) {
            nu = nu * step + b[k];
            ndu = ndu * step + static_cast<double>(k) * b[k];
        }
        nu = nu * step + b[0];
        u = nu;
        du = ndu;
        z += step;
        travelled += h;
    }
    return {u, du};
}

}  // namespace cheun
