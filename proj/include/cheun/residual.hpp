#ifndef CHEUN_RESIDUAL_HPP
#define CHEUN_RESIDUAL_HPP

#include <span>
#include <utility>
#include <vector>

#include "cheun/params.hpp"

namespace cheun {

// Relative ODE residuals over a set of points. residuals[i] is
// |u'' + a1 u' + a0 u| at points[i] divided by scale, where scale is the
// largest of |u''|, |a1 u'|, |a0 u| over all points. A function that is
// identically zero on the points reports zero residuals.
struct ResidualReport {
    std::vector<cplx> points;
    std::vector<double> residuals;
    double max_residual = 0.0;
    double scale = 0.0;
};

// Complex (unnormalized) residual u'' + a1 u' + a0 u of a sample.
cplx raw_residual(cplx a1, cplx a0, const C2Sample& s);
cplx che_raw_residual(const CheParams& q, const C2Sample& s, cplx z);

// Residual report against arbitrary second-order coefficients.
ResidualReport generic_residual(const CoeffFn& a1, const CoeffFn& a0, const C2Fn& fn,
                                std::span<const cplx> zs);

// Residual report against the canonical confluent Heun equation. Points
// must keep a distance of at least 1e-3 from the singular points 0 and 1.
ResidualReport che_residual(const CheParams& q, const C2Fn& fn, std::span<const cplx> zs);

// Ground-truth integrator: advances (u, u') from z0 to z_target along the
// straight segment by adaptive local Taylor expansion of order 20, with the
// expansion coefficients generated from the ODE recurrence at each step.
// The segment must stay clear of the singular points 0 and 1; the required
// clearance is 0.05, relaxed near the endpoints to 0.9 of their own
// distance to the singularities (never below 1e-3).
std::pair<cplx, cplx> taylor_oracle(const CheParams& q, cplx z0, cplx u0, cplx du0,
                                    cplx z_target);

}  // namespace cheun

#endif
