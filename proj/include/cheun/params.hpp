#ifndef CHEUN_PARAMS_HPP
#define CHEUN_PARAMS_HPP

#include "cheun/types.hpp"

namespace cheun {

// Parameters (p, gamma, delta, alpha, sigma) of the canonical confluent Heun
// equation
//
//   u'' + (4p + gamma/z + delta/(z-1)) u'
//       + (4 p alpha z - sigma) / (z (z-1)) u = 0,
//
// regular singular points at 0 and 1, irregular one at infinity. The sign
// convention puts -sigma in the numerator of the u-coefficient; p != 0 is
// required throughout.
struct CheParams {
    cplx p, gamma, delta, alpha, sigma;
};

// Builds a CheParams after checking p != 0 and finiteness of every field.
CheParams validate(cplx p, cplx gamma, cplx delta, cplx alpha, cplx sigma);

// Coefficients (a1 of u', a0 of u) of a second-order linear ODE at a point.
struct OdeCoeffs {
    cplx a1, a0;
};

// Points closer than this to a pole are rejected instead of producing huge
// coefficient values.
inline constexpr double pole_guard = 1e-8;

cplx coeff_f(const CheParams& q, cplx z);        // 4p + gamma/z + delta/(z-1)
cplx coeff_g(const CheParams& q, cplx z);        // (4 p alpha z - sigma)/(z(z-1))
cplx coeff_f_prime(const CheParams& q, cplx z);  // analytic d/dz of coeff_f
cplx coeff_g_prime(const CheParams& q, cplx z);  // analytic d/dz of coeff_g

// Location of the extra singular point z = sigma/(4 p alpha) of the
// derivative equation, when 4 p alpha != 0.
bool has_extra_singularity(const CheParams& q);
cplx extra_singularity(const CheParams& q);

// Coefficients of the second-order equation satisfied by w = u'. Beyond the
// poles at 0 and 1 this equation carries the extra singularity above; points
// within pole_guard of any of them are rejected, and g == 0 identically
// (alpha = 0 and sigma = 0) is rejected as GZero.
OdeCoeffs derivative_ode_coeffs(const CheParams& q, cplx z);

}  // namespace cheun

#endif
